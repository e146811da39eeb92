#pragma once

// Replay scripts: one line per master tick, each line a comma-separated list
// of LEFT, RIGHT, ESC, KEY (empty line = no input that tick).

#include <cstdint>
#include <functional>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arkanoid/engine.hpp"
#include "arkanoid/error.hpp"
#include "arkanoid/frame_dump.hpp"

namespace arkanoid {

using TickEvents = std::vector<KeyEvent>;

struct ReplayScript {
  std::vector<TickEvents> ticks;

  friend bool operator==(const ReplayScript&, const ReplayScript&) = default;
};

constexpr std::string_view to_token(KeyEvent key) {
  switch (key) {
    case KeyEvent::kLeft: return "LEFT";
    case KeyEvent::kRight: return "RIGHT";
    case KeyEvent::kEsc: return "ESC";
    case KeyEvent::kOther: return "KEY";
  }
  return "KEY";
}

inline KeyEvent parse_key_token(std::string_view token) {
  if (token == "LEFT") return KeyEvent::kLeft;
  if (token == "RIGHT") return KeyEvent::kRight;
  if (token == "ESC") return KeyEvent::kEsc;
  if (token == "KEY") return KeyEvent::kOther;
  throw Error(ErrorCode::kParse, "unknown replay token '" + std::string(token) + "'");
}

inline ReplayScript parse_replay_script(std::istream& in) {
  ReplayScript script;
  std::string line;
  while (std::getline(in, line)) {
    TickEvents events;
    if (!line.empty()) {
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = line.find(',', start);
        const std::string_view token = std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        events.push_back(parse_key_token(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    script.ticks.push_back(std::move(events));
  }
  return script;
}

inline ReplayScript parse_replay_script(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_replay_script(in);
}

inline std::string format_replay_script(const ReplayScript& script) {
  std::string out;
  for (const auto& tick : script.ticks) {
    for (std::size_t i = 0; i < tick.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += to_token(tick[i]);
    }
    out.push_back('\n');
  }
  return out;
}

/// Applies one tick's input, then steps if the game is running.
inline void advance_tick(GameState& state, const TickEvents& events) {
  for (const KeyEvent key : events) handle_key(state, key);
  if (state.phase == GamePhase::kPlaying) step(state);
}

struct ReplayResult {
  GameState final;
  ScreenBuffer final_frame;
  std::uint64_t frame_hash = 0;
};

using FrameObserver = std::function<void(const GameState&, const ScreenBuffer&)>;

/// Feeds the script tick by tick, rendering each frame. Stops early once the
/// game reaches a terminal phase.
inline ReplayResult run_replay(const GameConfig& config, std::uint64_t seed, const ReplayScript& script,
                               const FrameObserver& observer = {}) {
  GameState state = new_game(config, seed);
  ScreenBuffer frame = render_frame(state);
  for (const TickEvents& tick : script.ticks) {
    if (is_terminal(state.phase)) break;
    advance_tick(state, tick);
    frame = render_frame(state);
    if (observer) observer(state, frame);
  }
  const std::uint64_t hash = frame_hash(frame);
  return {std::move(state), std::move(frame), hash};
}

inline std::string format_replay_summary(const ReplayResult& result) {
  return "score=" + std::to_string(result.final.score) + "\n" + "lives=" + std::to_string(result.final.lives_left) +
         "\n" + "phase=" + std::string(to_string(result.final.phase)) + "\n" + "frame_hash=" + hex64(result.frame_hash) +
         "\n";
}

}  // namespace arkanoid
