#pragma once

// Main-loop state machine: welcome screen, keyboard commands, time-vector
// gated updates of pad, ball and falling blocks, scoring, lives and frames.
//
// One master tick = handle queued keys, then step():
//   1. pad gate   (tv_pad)  apply at most one queued pad move
//   2. ball gate  (tv_ball) move the ball, damage blocks, lose a life on the floor
//   3. fall gate  (tv_fall) drop falling blocks, score catches
//   4. board cleared        -> game over (won)

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arkanoid/bigfont.hpp"
#include "arkanoid/config.hpp"
#include "arkanoid/error.hpp"
#include "arkanoid/rng.hpp"
#include "arkanoid/screen.hpp"
#include "arkanoid/world.hpp"

namespace arkanoid {

struct TimeVector {
  int period = 1;
};

/// True on master ticks where a subsystem with this time vector runs.
constexpr bool tick_gate(std::uint64_t counter, TimeVector tv) {
  return tv.period > 0 && counter % static_cast<std::uint64_t>(tv.period) == 0;
}

enum class KeyEvent { kLeft, kRight, kEsc, kOther };

enum class GamePhase { kWelcome, kPlaying, kGameOver, kQuit };

constexpr std::string_view to_string(GamePhase phase) {
  switch (phase) {
    case GamePhase::kWelcome: return "Welcome";
    case GamePhase::kPlaying: return "Playing";
    case GamePhase::kGameOver: return "GameOver";
    case GamePhase::kQuit: return "Quit";
  }
  return "?";
}

constexpr bool is_terminal(GamePhase phase) {
  return phase == GamePhase::kGameOver || phase == GamePhase::kQuit;
}

enum class EventKind {
  kServed,
  kBlockCracked,
  kBlockDestroyed,
  kBlockFell,
  kFallingCaught,
  kFallingMissed,
  kLifeLost,
  kBoardCleared,
};

/// Append-only log of everything that changed score, lives or blocks.
struct GameEvent {
  std::uint64_t tick = 0;
  EventKind kind = EventKind::kServed;
  int block = -1;  // block index where one applies
  int value = 0;   // base value of the block involved
  int points = 0;  // points awarded by this event

  friend bool operator==(const GameEvent&, const GameEvent&) = default;
};

/// How many times each gated subsystem has run.
struct GateCounters {
  std::uint64_t pad = 0;
  std::uint64_t ball = 0;
  std::uint64_t fall = 0;

  friend bool operator==(const GateCounters&, const GateCounters&) = default;
};

struct GameState {
  GameConfig config;
  GamePhase phase = GamePhase::kWelcome;
  World world;
  int score = 0;
  int lives_left = 0;
  std::uint64_t tick_counter = 0;
  Lcg64 rng;
  std::optional<int> pending_pad_move;  // -1 / +1, latest key wins
  bool won = false;
  GateCounters gates;
  std::vector<GameEvent> events;

  friend bool operator==(const GameState&, const GameState&) = default;
};

inline GameState new_game(const GameConfig& config, std::uint64_t seed) {
  validate(config);
  GameState state;
  state.config = config;
  state.world = standard_layout(config);
  state.lives_left = config.lives;
  state.rng = Lcg64(seed);
  return state;
}

inline double next_random_unit(GameState& state) { return state.rng.next_unit(); }

namespace detail {

inline void log_event(GameState& state, EventKind kind, int block = -1, int value = 0, int points = 0) {
  state.events.push_back({state.tick_counter, kind, block, value, points});
}

/// Pad back to the center, fresh random serve.
inline void write_game_screen(GameState& state) {
  World& world = state.world;
  world.pad = centered_pad(world.area, state.config.pad_width, state.config.pad_step);
  serve(world, next_random_unit(state), state.config.serve_direction);
  state.pending_pad_move.reset();
  log_event(state, EventKind::kServed);
}

inline bool board_cleared(const World& world) {
  if (world.blocks.empty() || !world.falling.empty()) return false;
  for (const auto& block : world.blocks) {
    if (block.active) return false;
  }
  return true;
}

}  // namespace detail

inline void handle_key(GameState& state, KeyEvent key) {
  if (is_terminal(state.phase)) return;
  if (key == KeyEvent::kEsc) {
    state.phase = GamePhase::kQuit;
    return;
  }
  if (state.phase == GamePhase::kWelcome) {
    state.phase = GamePhase::kPlaying;
    detail::write_game_screen(state);
    return;
  }
  if (key == KeyEvent::kLeft) state.pending_pad_move = -1;
  if (key == KeyEvent::kRight) state.pending_pad_move = +1;
}

/// Advances one master tick. Only valid while playing.
inline void step(GameState& state) {
  if (state.phase != GamePhase::kPlaying) {
    throw Error(ErrorCode::kPhase, "step called in phase " + std::string(to_string(state.phase)));
  }
  const GameConfig& config = state.config;
  World& world = state.world;
  ++state.tick_counter;

  if (tick_gate(state.tick_counter, {config.tv_pad})) {
    ++state.gates.pad;
    if (state.pending_pad_move) {
      move_pad(world, *state.pending_pad_move);
      state.pending_pad_move.reset();
    }
  }

  if (tick_gate(state.tick_counter, {config.tv_ball})) {
    ++state.gates.ball;
    const BallStep ball = step_ball(world, config);
    for (const BlockHit& hit : ball.hits) {
      const int index = static_cast<int>(hit.index);
      switch (hit.outcome) {
        case HitOutcome::kColorChanged:
          detail::log_event(state, EventKind::kBlockCracked, index, hit.value);
          break;
        case HitOutcome::kDestroyed:
          state.score += hit.value;
          detail::log_event(state, EventKind::kBlockDestroyed, index, hit.value, hit.value);
          break;
        case HitOutcome::kFalls:
          detail::log_event(state, EventKind::kBlockFell, index, hit.value);
          break;
      }
    }
    if (ball.lost) {
      --state.lives_left;
      detail::log_event(state, EventKind::kLifeLost);
      if (state.lives_left <= 0) {
        state.phase = GamePhase::kGameOver;
        return;
      }
      detail::write_game_screen(state);
    }
  }

  if (tick_gate(state.tick_counter, {config.tv_fall})) {
    ++state.gates.fall;
    const FallStep fall = step_falling(world);
    state.score += fall.caught_value_sum;
    for (const auto& f : fall.caught) detail::log_event(state, EventKind::kFallingCaught, -1, f.value, 2 * f.value);
    for (const auto& f : fall.missed) detail::log_event(state, EventKind::kFallingMissed, -1, f.value);
  }

  if (detail::board_cleared(world)) {
    state.won = true;
    state.phase = GamePhase::kGameOver;
    detail::log_event(state, EventKind::kBoardCleared);
  }
}

// ---------------------------------------------------------------------------
// Frames

namespace palette {
inline constexpr ScreenCell kInfoBackground{0, 0x80};
inline constexpr ScreenCell kPlayBackground{0, 0x00};
inline constexpr std::uint8_t kPadColor = color::kLightCyan;
inline constexpr std::uint8_t kBallColor = color::kWhite;
inline constexpr std::uint8_t kBlockEdge = 0xDD;  // left half block
}  // namespace palette

namespace detail {

inline const GlyphTable& table_with_logo(FontSize size) {
  static const GlyphTable k3x5 = register_glyph(builtin_table(FontSize::k3x5), kLogoGlyphId, logo_glyph());
  static const GlyphTable k5x7 = register_glyph(builtin_table(FontSize::k5x7), kLogoGlyphId, logo_glyph());
  static const GlyphTable k9x11 = register_glyph(builtin_table(FontSize::k9x11), kLogoGlyphId, logo_glyph());
  switch (size) {
    case FontSize::k5x7: return k5x7;
    case FontSize::k9x11: return k9x11;
    case FontSize::k3x5: break;
  }
  return k3x5;
}

inline int centered_x(int container_width, int content_width) { return (container_width - content_width) / 2; }

inline ScreenBuffer render_welcome(const GameConfig& config) {
  ScreenBuffer buf(config.width, config.height, palette::kInfoBackground);
  const GlyphStyle title_style{};
  const GlyphStyle prompt_style{kFullBlock, color::kWhite, color::kDarkGray};

  const GlyphTable& title_font = table_with_logo(FontSize::k5x7);
  const std::string_view title = "ARKANOID";
  const CellSize title_size = measure(title_font, title);
  const int title_y = 1;
  draw_big_string(buf, title_font, title, {centered_x(config.width, title_size.width), title_y}, title_style);

  const Glyph& logo = title_font.glyph_for(kLogoGlyphId);
  const int logo_y = title_y + title_size.height + 1;
  draw_glyph(buf, logo, {centered_x(config.width, logo.width()), logo_y}, title_style);

  const GlyphTable& prompt_font = table_with_logo(FontSize::k3x5);
  const std::string_view prompt = "PRESS ANY KEY";
  const CellSize prompt_size = measure(prompt_font, prompt);
  draw_big_string(buf, prompt_font, prompt,
                  {centered_x(config.width, prompt_size.width), logo_y + logo.height() + 1}, prompt_style);
  return buf;
}

inline void render_info_bar(ScreenBuffer& buf, const GameState& state) {
  const GameConfig& config = state.config;
  if (config.info_bar_height <= 0) return;
  buf.fill({0, 0, config.width - 1, config.info_bar_height - 1}, palette::kInfoBackground);
  const GlyphTable& font = table_with_logo(config.info_font);
  const GlyphStyle style{};
  const int y = std::max(0, (config.info_bar_height - font.cell_size().height) / 2);
  draw_big_string(buf, font, "SCORE:" + std::to_string(state.score), {1, y}, style);
  const std::string lives = "LIVES:" + std::to_string(state.lives_left);
  draw_big_string(buf, font, lives, {config.width - 1 - measure(font, lives).width, y}, style);
}

inline void render_game_part(ScreenBuffer& buf, const GameState& state) {
  const World& world = state.world;
  buf.fill(world.area.bounds, palette::kPlayBackground);
  for (const BlockCell& block : world.blocks) {
    if (!block.active) continue;
    buf.fill(block.area, ScreenCell::make(kFullBlock, block.color, color::kBlack));
    if (block.area.width() > 1) {
      const Rect edge{block.area.right, block.area.top, block.area.right, block.area.bottom};
      buf.fill(edge, ScreenCell::make(palette::kBlockEdge, block.color, color::kBlack));
    }
  }
  for (const FallingBlock& f : world.falling) {
    buf.fill({f.left, f.row, f.right, f.row}, ScreenCell::make(kFullBlock, state.config.cracked_color, color::kBlack));
  }
  buf.fill(world.pad.area, ScreenCell::make(kFullBlock, palette::kPadColor, color::kBlack));
  if (world.ball.active && buf.contains(world.ball.cur)) {
    buf.put(world.ball.cur, ScreenCell::make(kFullBlock, palette::kBallColor, color::kBlack));
  }
}

inline void render_game_over_banner(ScreenBuffer& buf, const GameState& state) {
  const GlyphTable& font = table_with_logo(state.config.info_font);
  const std::string_view text = state.won ? "YOU WIN" : "GAME OVER";
  const CellSize size = measure(font, text);
  const Rect& b = state.world.area.bounds;
  const Coord origin{b.left + centered_x(b.width(), size.width), b.top + centered_x(b.height(), size.height)};
  // One-cell frame around the text so it reads over blocks.
  buf.fill({origin.x - 1, origin.y - 1, origin.x + size.width, origin.y + size.height}, palette::kInfoBackground);
  draw_big_string(buf, font, text, origin, GlyphStyle{});
}

}  // namespace detail

/// Pure function of the state.
inline ScreenBuffer render_frame(const GameState& state) {
  if (state.phase == GamePhase::kWelcome) return detail::render_welcome(state.config);
  ScreenBuffer buf(state.config.width, state.config.height, palette::kPlayBackground);
  detail::render_info_bar(buf, state);
  detail::render_game_part(buf, state);
  if (state.phase == GamePhase::kGameOver) detail::render_game_over_banner(buf, state);
  return buf;
}

}  // namespace arkanoid
