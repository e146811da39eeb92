#pragma once

// In-memory console surface: a row-major grid of character+attribute cells.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arkanoid/error.hpp"

namespace arkanoid {

// Classic 16-color console palette indices.
namespace color {
inline constexpr std::uint8_t kBlack = 0;
inline constexpr std::uint8_t kBlue = 1;
inline constexpr std::uint8_t kGreen = 2;
inline constexpr std::uint8_t kCyan = 3;
inline constexpr std::uint8_t kRed = 4;
inline constexpr std::uint8_t kMagenta = 5;
inline constexpr std::uint8_t kBrown = 6;
inline constexpr std::uint8_t kLightGray = 7;
inline constexpr std::uint8_t kDarkGray = 8;
inline constexpr std::uint8_t kLightBlue = 9;
inline constexpr std::uint8_t kLightGreen = 10;
inline constexpr std::uint8_t kLightCyan = 11;
inline constexpr std::uint8_t kLightRed = 12;
inline constexpr std::uint8_t kLightMagenta = 13;
inline constexpr std::uint8_t kYellow = 14;
inline constexpr std::uint8_t kWhite = 15;
}  // namespace color

/// Packs a foreground/background pair into a console attribute byte:
/// low nibble = foreground, high nibble = background.
constexpr std::uint8_t encode_attrs(std::uint8_t fg, std::uint8_t bg) {
  return static_cast<std::uint8_t>(((bg & 0x0F) << 4) | (fg & 0x0F));
}

constexpr std::uint8_t attr_fg(std::uint8_t attrs) { return attrs & 0x0F; }
constexpr std::uint8_t attr_bg(std::uint8_t attrs) { return static_cast<std::uint8_t>(attrs >> 4); }

struct ScreenCell {
  std::uint8_t char_code = 0;
  std::uint8_t attrs = 0;

  constexpr std::uint8_t fg() const { return attr_fg(attrs); }
  constexpr std::uint8_t bg() const { return attr_bg(attrs); }

  static constexpr ScreenCell make(std::uint8_t code, std::uint8_t fg, std::uint8_t bg) {
    return ScreenCell{code, encode_attrs(fg, bg)};
  }

  friend constexpr bool operator==(const ScreenCell&, const ScreenCell&) = default;
};

/// x = column (grows right), y = row (grows down), origin top-left.
/// Signed so that art can be positioned partially off-screen.
struct Coord {
  int x = 0;
  int y = 0;

  friend constexpr Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr bool operator==(const Coord&, const Coord&) = default;
};

/// Inclusive cell bounds.
struct Rect {
  int left = 0;
  int top = 0;
  int right = 0;
  int bottom = 0;

  constexpr int width() const { return right - left + 1; }
  constexpr int height() const { return bottom - top + 1; }
  constexpr bool normalized() const { return left <= right && top <= bottom; }
  constexpr bool contains(Coord c) const {
    return c.x >= left && c.x <= right && c.y >= top && c.y <= bottom;
  }
  constexpr bool intersects(const Rect& o) const {
    return left <= o.right && o.left <= right && top <= o.bottom && o.top <= bottom;
  }

  friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

using CellGrid = std::vector<std::vector<ScreenCell>>;

struct CellChange {
  Coord at;
  ScreenCell cell;

  friend constexpr bool operator==(const CellChange&, const CellChange&) = default;
};

/// Changes between two equally sized buffers, in row-major order.
using CellPatch = std::vector<CellChange>;

class ScreenBuffer {
 public:
  ScreenBuffer(int width, int height, ScreenCell fill = {}) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw Error(ErrorCode::kInvalidDimension,
                  "buffer must be at least 1x1, got " + std::to_string(width) + "x" +
                      std::to_string(height));
    }
    cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  Rect bounds() const { return {0, 0, width_ - 1, height_ - 1}; }
  bool contains(Coord c) const { return bounds().contains(c); }

  const std::vector<ScreenCell>& cells() const { return cells_; }

  const ScreenCell& at(Coord c) const {
    check(c);
    return cells_[index(c)];
  }

  void put(Coord c, ScreenCell cell) {
    check(c);
    cells_[index(c)] = cell;
  }

  /// Writes `cell` over area ∩ buffer; anything outside is silently dropped.
  void fill(const Rect& area, ScreenCell cell) {
    if (!area.normalized()) return;
    const Rect clip{std::max(area.left, 0), std::max(area.top, 0), std::min(area.right, width_ - 1),
                    std::min(area.bottom, height_ - 1)};
    for (int y = clip.top; y <= clip.bottom; ++y) {
      for (int x = clip.left; x <= clip.right; ++x) cells_[index({x, y})] = cell;
    }
  }

  /// Copies `src` with its top-left corner at `origin`, clipping at the edges.
  void blit(const CellGrid& src, Coord origin) {
    if (src.empty()) return;
    const std::size_t cols = src.front().size();
    for (const auto& row : src) {
      if (row.size() != cols) {
        throw Error(ErrorCode::kInvalidSource, "blit source rows must have equal length");
      }
    }
    for (std::size_t r = 0; r < src.size(); ++r) {
      const int y = origin.y + static_cast<int>(r);
      if (y < 0 || y >= height_) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        const int x = origin.x + static_cast<int>(c);
        if (x < 0 || x >= width_) continue;
        cells_[index({x, y})] = src[r][c];
      }
    }
  }

  void apply(const CellPatch& patch) {
    for (const auto& change : patch) put(change.at, change.cell);
  }

  friend bool operator==(const ScreenBuffer&, const ScreenBuffer&) = default;

 private:
  std::size_t index(Coord c) const {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.x);
  }

  void check(Coord c) const {
    if (!contains(c)) {
      throw Error(ErrorCode::kOutOfBounds, "(" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                               ") outside " + std::to_string(width_) + "x" +
                                               std::to_string(height_) + " buffer");
    }
  }

  int width_;
  int height_;
  std::vector<ScreenCell> cells_;
};

// Value-returning forms of the buffer mutators.

inline ScreenBuffer put_cell(ScreenBuffer buf, Coord at, ScreenCell cell) {
  buf.put(at, cell);
  return buf;
}

inline ScreenBuffer fill_rect(ScreenBuffer buf, const Rect& area, ScreenCell cell) {
  buf.fill(area, cell);
  return buf;
}

inline ScreenBuffer blit(ScreenBuffer buf, const CellGrid& src, Coord origin) {
  buf.blit(src, origin);
  return buf;
}

inline ScreenBuffer apply_patch(ScreenBuffer buf, const CellPatch& patch) {
  buf.apply(patch);
  return buf;
}

/// Cells of `after` that differ from `before`.
inline CellPatch diff(const ScreenBuffer& before, const ScreenBuffer& after) {
  if (before.width() != after.width() || before.height() != after.height()) {
    throw Error(ErrorCode::kShapeMismatch, "diff requires equally sized buffers");
  }
  CellPatch patch;
  const auto& a = before.cells();
  const auto& b = after.cells();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      const int w = before.width();
      patch.push_back({{static_cast<int>(i) % w, static_cast<int>(i) / w}, b[i]});
    }
  }
  return patch;
}

}  // namespace arkanoid
