#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arkanoid/bigfont.hpp"
#include "arkanoid/error.hpp"
#include "arkanoid/screen.hpp"

namespace arkanoid {

/// Diagonal unit motion; both components are always -1 or +1.
struct Direction {
  int dx = 1;
  int dy = -1;

  constexpr bool valid() const { return (dx == 1 || dx == -1) && (dy == 1 || dy == -1); }
  constexpr Coord offset() const { return {dx, dy}; }
  friend constexpr bool operator==(const Direction&, const Direction&) = default;
};

/// Color and point value of one block row.
struct RowStyle {
  std::uint8_t color = color::kLightRed;
  int value = 0;

  friend bool operator==(const RowStyle&, const RowStyle&) = default;
};

/// Largest period a time vector can hold (one 16-bit word).
inline constexpr int kMaxTimeVector = 65535;

struct GameConfig {
  int width = 80;
  int height = 30;
  int info_bar_height = 7;

  int pad_width = 8;
  int pad_step = 2;
  int lives = 3;

  // Time vectors: a subsystem runs on master ticks divisible by its period.
  int tv_pad = 1;
  int tv_ball = 2;
  int tv_fall = 3;

  Direction serve_direction{+1, -1};

  int block_rows = 4;
  int block_cols = 10;
  int block_height = 2;
  // Empty rows between the top wall and the first block row.
  int block_top_gap = 2;
  // Applied to rows top to bottom, repeating if there are more rows.
  std::vector<RowStyle> row_styles{
      {color::kLightRed, 8},
      {color::kYellow, 6},
      {color::kLightGreen, 4},
      {color::kLightBlue, 2},
  };
  std::uint8_t cracked_color = color::kDarkGray;

  FontSize info_font = FontSize::k3x5;

  Rect play_bounds() const { return {0, info_bar_height, width - 1, height - 1}; }

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

/// Throws Error(kConfig) describing the first violated constraint.
inline void validate(const GameConfig& c) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kConfig, why); };
  auto check_tv = [&](int tv, const char* name) {
    if (tv < 1 || tv > kMaxTimeVector) fail(std::string(name) + " must be in [1, 65535]");
  };
  if (c.width < 2 || c.height < 1) fail("console must be at least 2 columns wide");
  if (c.info_bar_height < 0) fail("info_bar_height must be >= 0");
  check_tv(c.tv_pad, "tv_pad");
  check_tv(c.tv_ball, "tv_ball");
  check_tv(c.tv_fall, "tv_fall");
  if (c.tv_fall <= c.tv_pad) fail("tv_fall must exceed tv_pad (falling blocks move slower than the pad)");
  if (c.pad_width < 1 || c.pad_width > c.width) fail("pad_width must be in [1, width]");
  if (c.pad_step < 1) fail("pad_step must be >= 1");
  if (c.lives < 1) fail("lives must be >= 1");
  if (!c.serve_direction.valid() || c.serve_direction.dy != -1) {
    fail("serve_direction must be diagonal and point up, away from the pad");
  }
  if (c.block_rows < 0 || c.block_cols < 0 || c.block_height < 1 || c.block_top_gap < 0) {
    fail("block matrix dimensions must be non-negative");
  }
  if (c.block_rows > 0) {
    if (c.block_cols < 1 || c.width / c.block_cols < 1) fail("block_cols must be in [1, width]");
    if (c.row_styles.empty()) fail("row_styles must not be empty");
  }
  for (const auto& style : c.row_styles) {
    if (style.color > 15) fail("row color must be a palette index 0..15");
    if (style.value < 0) fail("row value must be >= 0");
  }
  if (c.cracked_color > 15) fail("cracked_color must be a palette index 0..15");
  // Gap + blocks + one free row for the ball + the pad row.
  const int play_rows = c.height - c.info_bar_height;
  const int needed = c.block_top_gap + c.block_rows * c.block_height + 2;
  if (play_rows < needed) {
    fail("play area has " + std::to_string(play_rows) + " rows, layout needs " + std::to_string(needed));
  }
}

}  // namespace arkanoid
