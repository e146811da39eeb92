#pragma once

// Game entities and the grid physics core.
//
// The ball walks diagonally one cell per movement. Before each move the three
// cells the step could enter are inspected:
//
//        H = cur + (dx, 0)        V face  -> Top / Bottom
//        V = cur + (0, dy)        H face  -> Left / Right
//        D = cur + (dx, dy)       D alone -> corner, both faces
//
// and the direction is reflected off whichever faces were crossed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arkanoid/config.hpp"
#include "arkanoid/error.hpp"
#include "arkanoid/screen.hpp"

namespace arkanoid {

enum class HitSide : std::uint8_t { kTop = 1, kBottom = 2, kLeft = 4, kRight = 8 };

/// The faces of a struck object that the ball crossed.
class SideSet {
 public:
  constexpr SideSet() = default;
  constexpr SideSet(std::initializer_list<HitSide> sides) {
    for (const HitSide s : sides) add(s);
  }

  constexpr void add(HitSide s) { bits_ |= static_cast<std::uint8_t>(s); }
  constexpr bool has(HitSide s) const { return (bits_ & static_cast<std::uint8_t>(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  /// Non-empty, and never two opposite faces.
  constexpr bool legal() const {
    return !empty() && !(has(HitSide::kTop) && has(HitSide::kBottom)) &&
           !(has(HitSide::kLeft) && has(HitSide::kRight));
  }

  friend constexpr bool operator==(const SideSet&, const SideSet&) = default;

 private:
  std::uint8_t bits_ = 0;
};

inline std::string to_string(const SideSet& sides) {
  std::string s = "{";
  auto append = [&](HitSide side, const char* name) {
    if (!sides.has(side)) return;
    if (s.size() > 1) s += ",";
    s += name;
  };
  append(HitSide::kTop, "Top");
  append(HitSide::kBottom, "Bottom");
  append(HitSide::kLeft, "Left");
  append(HitSide::kRight, "Right");
  return s + "}";
}

enum class OccupantKind { kEmpty, kWallLeft, kWallRight, kWallTop, kFloor, kPad, kBlock };

struct Occupant {
  OccupantKind kind = OccupantKind::kEmpty;
  std::size_t block = 0;  // meaningful only for kBlock

  constexpr bool solid() const { return kind != OccupantKind::kEmpty; }
  friend constexpr bool operator==(const Occupant&, const Occupant&) = default;
};

struct CollisionReport {
  std::vector<Occupant> targets;  // empty means no hit
  SideSet sides;

  bool hit() const { return !targets.empty(); }
  bool floor() const { return hit() && targets.front().kind == OccupantKind::kFloor; }

  std::vector<std::size_t> blocks() const {
    std::vector<std::size_t> out;
    for (const auto& t : targets) {
      if (t.kind == OccupantKind::kBlock) out.push_back(t.block);
    }
    return out;
  }

  friend bool operator==(const CollisionReport&, const CollisionReport&) = default;
};

struct BlockCell {
  Rect area;
  std::uint8_t color = 0;
  int value = 0;
  int hit_count = 1;
  bool active = true;
  bool first_row = false;

  friend bool operator==(const BlockCell&, const BlockCell&) = default;
};

struct Pad {
  Rect area;  // single row
  int step = 1;

  int width() const { return area.width(); }
  friend bool operator==(const Pad&, const Pad&) = default;
};

struct Ball {
  Coord cur;
  Coord prev;
  bool active = false;

  friend bool operator==(const Ball&, const Ball&) = default;
};

struct FallingBlock {
  int left = 0;
  int right = 0;
  int row = 0;
  int value = 0;

  friend bool operator==(const FallingBlock&, const FallingBlock&) = default;
};

struct PlayArea {
  Rect bounds;

  int pad_row() const { return bounds.bottom; }
  friend bool operator==(const PlayArea&, const PlayArea&) = default;
};

struct World {
  std::vector<BlockCell> blocks;
  Pad pad;
  Ball ball;
  std::vector<FallingBlock> falling;
  PlayArea area;

  friend bool operator==(const World&, const World&) = default;
};

inline Pad centered_pad(const PlayArea& area, int width, int step) {
  const int left = area.bounds.left + (area.bounds.width() - width) / 2;
  return Pad{{left, area.pad_row(), left + width - 1, area.pad_row()}, step};
}

/// Block matrix tiled across the play area below `block_top_gap` empty rows,
/// with the pad centered on the bottom row. The ball starts inactive.
inline World standard_layout(const GameConfig& config) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kLayout, why); };
  World world;
  world.area.bounds = config.play_bounds();
  const Rect& b = world.area.bounds;
  if (!b.normalized()) fail("empty play area");
  if (config.pad_width < 1 || config.pad_width > b.width()) fail("pad does not fit the play area");
  const int needed_rows = config.block_top_gap + config.block_rows * config.block_height + 2;
  if (b.height() < needed_rows) {
    fail("play area has " + std::to_string(b.height()) + " rows, layout needs " + std::to_string(needed_rows));
  }

  if (config.block_rows > 0) {
    if (config.block_cols < 1 || config.row_styles.empty()) fail("block matrix needs columns and row styles");
    const int block_width = b.width() / config.block_cols;
    if (block_width < 1) fail("too many block columns for the play area width");
    const int margin = (b.width() - block_width * config.block_cols) / 2;
    for (int r = 0; r < config.block_rows; ++r) {
      const RowStyle& style = config.row_styles[static_cast<std::size_t>(r) % config.row_styles.size()];
      const int top = b.top + config.block_top_gap + r * config.block_height;
      for (int c = 0; c < config.block_cols; ++c) {
        const int left = b.left + margin + c * block_width;
        BlockCell block;
        block.area = {left, top, left + block_width - 1, top + config.block_height - 1};
        block.color = style.color;
        block.value = style.value;
        block.first_row = (r == 0);
        block.hit_count = block.first_row ? 2 : 1;
        world.blocks.push_back(block);
      }
    }
  }
  world.pad = centered_pad(world.area, config.pad_width, config.pad_step);
  return world;
}

/// What occupies a cell. Anything outside the play area is a wall or the floor;
/// the floor wins below the bottom row, then the top wall, then the side walls.
inline Occupant occupant(const World& world, Coord at) {
  const Rect& b = world.area.bounds;
  if (at.y > b.bottom) return {OccupantKind::kFloor};
  if (at.y < b.top) return {OccupantKind::kWallTop};
  if (at.x < b.left) return {OccupantKind::kWallLeft};
  if (at.x > b.right) return {OccupantKind::kWallRight};
  if (world.pad.area.contains(at)) return {OccupantKind::kPad};
  for (std::size_t i = 0; i < world.blocks.size(); ++i) {
    const BlockCell& block = world.blocks[i];
    if (block.active && block.area.contains(at)) return {OccupantKind::kBlock, i};
  }
  return {};
}

inline Direction ball_direction(const Ball& ball) {
  const Direction d{ball.cur.x - ball.prev.x, ball.cur.y - ball.prev.y};
  if (!d.valid()) {
    throw Error(ErrorCode::kCorruptBall, "ball displacement (" + std::to_string(d.dx) + "," +
                                             std::to_string(d.dy) + ") is not a diagonal unit step");
  }
  return d;
}

inline CollisionReport find_collision(const World& world, Coord cur, Direction dir) {
  const HitSide horizontal_face = dir.dy > 0 ? HitSide::kTop : HitSide::kBottom;
  const HitSide vertical_face = dir.dx > 0 ? HitSide::kLeft : HitSide::kRight;

  CollisionReport report;
  const Occupant v = occupant(world, {cur.x, cur.y + dir.dy});
  if (v.kind == OccupantKind::kFloor) {
    report.targets.push_back(v);
    report.sides.add(horizontal_face);
    return report;
  }
  const Occupant h = occupant(world, {cur.x + dir.dx, cur.y});
  if (v.solid()) {
    report.targets.push_back(v);
    report.sides.add(horizontal_face);
  }
  if (h.solid()) {
    if (!v.solid() || h != v) report.targets.push_back(h);
    report.sides.add(vertical_face);
  }
  if (report.hit()) return report;

  const Occupant d = occupant(world, cur + dir.offset());
  if (d.solid()) {
    report.targets.push_back(d);
    report.sides.add(horizontal_face);
    report.sides.add(vertical_face);
  }
  return report;
}

/// Specular reflection: a Top face sends the ball up, Bottom down, Left to the
/// left, Right to the right.
inline Direction rebound(Direction dir, const SideSet& sides) {
  if (!sides.legal()) throw Error(ErrorCode::kInvalidSides, "cannot rebound off " + to_string(sides));
  if (sides.has(HitSide::kTop)) dir.dy = -1;
  if (sides.has(HitSide::kBottom)) dir.dy = +1;
  if (sides.has(HitSide::kLeft)) dir.dx = -1;
  if (sides.has(HitSide::kRight)) dir.dx = +1;
  return dir;
}

enum class HitOutcome { kColorChanged, kDestroyed, kFalls };

struct HitResult {
  BlockCell block;
  HitOutcome outcome;
  std::optional<FallingBlock> spawned;
};

/// One ball hit on an active block. A block that survives is repainted in the
/// cracked color; a first-row block that runs out of hits falls instead of
/// vanishing.
inline HitResult register_hit(BlockCell block, const GameConfig& config) {
  if (!block.active || block.hit_count < 1) throw Error(ErrorCode::kInvalidHit, "block is not active");
  block.hit_count -= 1;
  if (block.hit_count > 0) {
    block.color = config.cracked_color;
    return {block, HitOutcome::kColorChanged, std::nullopt};
  }
  block.active = false;
  if (!block.first_row) return {block, HitOutcome::kDestroyed, std::nullopt};
  FallingBlock falling{block.area.left, block.area.right, block.area.bottom, block.value};
  return {block, HitOutcome::kFalls, falling};
}

/// Shifts the pad by one step toward `direction` (sign only), clamped to the
/// play area.
inline void move_pad(World& world, int direction) {
  if (direction == 0) return;
  const Rect& b = world.area.bounds;
  Pad& pad = world.pad;
  const int width = pad.width();
  int left = pad.area.left + (direction > 0 ? pad.step : -pad.step);
  left = std::clamp(left, b.left, b.right - width + 1);
  pad.area.left = left;
  pad.area.right = left + width - 1;
}

struct FallStep {
  int caught_value_sum = 0;  // already doubled
  std::vector<FallingBlock> caught;
  std::vector<FallingBlock> missed;
};

/// Drops every falling block one row. Blocks reaching the pad row are removed:
/// caught ones (column overlap with the pad) score double their value.
inline FallStep step_falling(World& world) {
  FallStep result;
  const int pad_row = world.area.pad_row();
  std::vector<FallingBlock> still_falling;
  for (FallingBlock f : world.falling) {
    f.row += 1;
    if (f.row < pad_row) {
      still_falling.push_back(f);
      continue;
    }
    const bool overlap = f.left <= world.pad.area.right && world.pad.area.left <= f.right;
    if (overlap) {
      result.caught_value_sum += 2 * f.value;
      result.caught.push_back(f);
    } else {
      result.missed.push_back(f);
    }
  }
  world.falling = std::move(still_falling);
  return result;
}

/// Places the ball just above the pad at column pad.left + floor(r * width)
/// and launches it along `dir`. `r` is clamped into [0, 1).
inline void serve(World& world, double r, Direction dir) {
  const int width = world.pad.width();
  int offset = std::isfinite(r) && r > 0.0 ? static_cast<int>(std::floor(r * width)) : 0;
  offset = std::clamp(offset, 0, width - 1);
  Ball& ball = world.ball;
  ball.cur = {world.pad.area.left + offset, world.area.pad_row() - 1};
  ball.prev = ball.cur - dir.offset();
  ball.active = true;
}

struct BlockHit {
  std::size_t index;
  HitOutcome outcome;
  int value;
};

struct BallStep {
  CollisionReport report;
  std::vector<BlockHit> hits;
  bool moved = false;
  bool lost = false;  // crossed into the floor
};

/// One ball movement: detect, damage struck blocks, reflect, then re-step
/// along the new direction. If the re-step is blocked too the ball holds its
/// cell for this movement, already facing the new direction.
inline BallStep step_ball(World& world, const GameConfig& config) {
  BallStep step;
  Ball& ball = world.ball;
  if (!ball.active) return step;
  const Direction dir = ball_direction(ball);
  step.report = find_collision(world, ball.cur, dir);

  if (!step.report.hit()) {
    ball.prev = ball.cur;
    ball.cur = ball.cur + dir.offset();
    step.moved = true;
    return step;
  }
  if (step.report.floor()) {
    ball.active = false;
    step.lost = true;
    return step;
  }

  for (const std::size_t index : step.report.blocks()) {
    HitResult hit = register_hit(world.blocks[index], config);
    world.blocks[index] = hit.block;
    if (hit.spawned) world.falling.push_back(*hit.spawned);
    step.hits.push_back({index, hit.outcome, hit.block.value});
  }

  const Direction next = rebound(dir, step.report.sides);
  if (!find_collision(world, ball.cur, next).hit()) {
    ball.prev = ball.cur;
    ball.cur = ball.cur + next.offset();
    step.moved = true;
  } else {
    ball.prev = ball.cur - next.offset();
  }
  return step;
}

}  // namespace arkanoid
