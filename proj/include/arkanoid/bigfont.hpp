#pragma once

// "Big string" font system: glyphs are fill masks addressed by id and drawn as
// opaque rectangles of full/empty cells.
//
// Ids 0..255 alias the ASCII code of the character they depict; ids above 255
// hold custom art of any size.
//
// Template file format (one or more entries, blank lines and ';' comment lines
// allowed between entries):
//
//   glyph <id> <width> <height>
//   <height lines of exactly <width> chars, '#' = full, '.' = empty>

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arkanoid/builtin_fonts.hpp"
#include "arkanoid/error.hpp"
#include "arkanoid/screen.hpp"

namespace arkanoid {

using GlyphId = std::uint32_t;

inline constexpr GlyphId kMaxAsciiGlyphId = 255;
inline constexpr GlyphId kLogoGlyphId = 256;
inline constexpr std::uint8_t kFullBlock = 219;

class Glyph {
 public:
  using Mask = std::vector<std::vector<bool>>;

  explicit Glyph(Mask mask) : mask_(std::move(mask)) {
    if (mask_.empty() || mask_.front().empty()) {
      throw Error(ErrorCode::kInvalidGlyph, "glyph must be at least 1x1");
    }
    for (const auto& row : mask_) {
      if (row.size() != mask_.front().size()) {
        throw Error(ErrorCode::kInvalidGlyph, "glyph mask rows must have equal length");
      }
    }
  }

  /// Builds a glyph from rows of '#' (full) and '.' (empty).
  static Glyph from_rows(const std::vector<std::string>& rows) {
    Mask mask;
    mask.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<bool> bits;
      bits.reserve(row.size());
      for (const char c : row) {
        if (c != '#' && c != '.') throw Error(ErrorCode::kInvalidGlyph, "unexpected mask char '" + std::string(1, c) + "'");
        bits.push_back(c == '#');
      }
      mask.push_back(std::move(bits));
    }
    return Glyph(std::move(mask));
  }

  int width() const { return static_cast<int>(mask_.front().size()); }
  int height() const { return static_cast<int>(mask_.size()); }
  bool full(int x, int y) const { return mask_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]; }
  const Mask& mask() const { return mask_; }

  friend bool operator==(const Glyph&, const Glyph&) = default;

 private:
  Mask mask_;
};

struct GlyphStyle {
  std::uint8_t fill_char = kFullBlock;
  std::uint8_t fill_fg = color::kRed;
  std::uint8_t background = color::kDarkGray;  // 0x80 when packed

  ScreenCell full_cell() const { return ScreenCell::make(fill_char, fill_fg, background); }
  ScreenCell empty_cell() const { return ScreenCell::make(0, color::kBlack, background); }
};

enum class FontSize { k3x5, k5x7, k9x11 };

struct CellSize {
  int width;
  int height;

  friend constexpr bool operator==(const CellSize&, const CellSize&) = default;
};

constexpr CellSize nominal_size(FontSize size) {
  switch (size) {
    case FontSize::k3x5: return {3, 5};
    case FontSize::k5x7: return {5, 7};
    case FontSize::k9x11: return {9, 11};
  }
  return {0, 0};
}

constexpr std::string_view to_string(FontSize size) {
  switch (size) {
    case FontSize::k3x5: return "3x5";
    case FontSize::k5x7: return "5x7";
    case FontSize::k9x11: return "9x11";
  }
  return "?";
}

inline FontSize parse_font_size(std::string_view label) {
  if (label == "3x5") return FontSize::k3x5;
  if (label == "5x7") return FontSize::k5x7;
  if (label == "9x11") return FontSize::k9x11;
  throw Error(ErrorCode::kUnsupportedSize, "unknown font size '" + std::string(label) + "'");
}

using GlyphEntry = std::pair<GlyphId, Glyph>;

inline std::vector<GlyphEntry> parse_glyph_templates(std::istream& in) {
  std::vector<GlyphEntry> entries;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kParse, "glyph templates line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == ';') continue;
    std::istringstream header(line);
    std::string keyword;
    long long id = -1;
    int w = 0;
    int h = 0;
    std::string extra;
    if (!(header >> keyword >> id >> w >> h) || keyword != "glyph" || (header >> extra)) {
      throw fail("expected 'glyph <id> <width> <height>'");
    }
    if (id < 0 || w < 1 || h < 1) throw fail("id must be >= 0 and dimensions >= 1");
    std::vector<std::string> rows;
    for (int r = 0; r < h; ++r) {
      if (!std::getline(in, line)) throw fail("truncated glyph " + std::to_string(id));
      ++line_no;
      if (static_cast<int>(line.size()) != w) throw fail("row width differs from header");
      rows.push_back(line);
    }
    try {
      entries.emplace_back(static_cast<GlyphId>(id), Glyph::from_rows(rows));
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  return entries;
}

inline std::vector<GlyphEntry> parse_glyph_templates(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_glyph_templates(in);
}

inline std::string format_glyph_template(GlyphId id, const Glyph& glyph) {
  std::string out = "glyph " + std::to_string(id) + " " + std::to_string(glyph.width()) + " " +
                    std::to_string(glyph.height()) + "\n";
  for (int y = 0; y < glyph.height(); ++y) {
    for (int x = 0; x < glyph.width(); ++x) out.push_back(glyph.full(x, y) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

/// Id-addressed glyph set. Every ASCII-range glyph has the table's nominal
/// size; custom glyphs (id > 255) may be any size.
class GlyphTable {
 public:
  explicit GlyphTable(FontSize size) : size_(size) {}

  GlyphTable(FontSize size, std::vector<GlyphEntry> entries) : size_(size) {
    const CellSize cell = nominal_size(size);
    for (auto& [id, glyph] : entries) {
      if (id <= kMaxAsciiGlyphId && (glyph.width() != cell.width || glyph.height() != cell.height)) {
        throw Error(ErrorCode::kInvalidGlyph, "glyph " + std::to_string(id) + " does not match table size " +
                                                  std::string(to_string(size)));
      }
      glyphs_.insert_or_assign(id, std::move(glyph));
    }
  }

  FontSize size() const { return size_; }
  CellSize cell_size() const { return nominal_size(size_); }

  bool contains(GlyphId id) const { return glyphs_.contains(id); }

  const Glyph& glyph_for(GlyphId id) const {
    const auto it = glyphs_.find(id);
    if (it == glyphs_.end()) throw Error(ErrorCode::kMissingGlyph, "no glyph with id " + std::to_string(id));
    return it->second;
  }

  /// Adds or replaces a custom glyph.
  void register_glyph(GlyphId id, Glyph glyph) {
    if (id <= kMaxAsciiGlyphId) {
      throw Error(ErrorCode::kReservedId, "ids 0..255 are reserved for ASCII glyphs, got " + std::to_string(id));
    }
    glyphs_.insert_or_assign(id, std::move(glyph));
  }

  const std::map<GlyphId, Glyph>& glyphs() const { return glyphs_; }

 private:
  FontSize size_;
  std::map<GlyphId, Glyph> glyphs_;
};

inline GlyphTable register_glyph(GlyphTable table, GlyphId id, Glyph glyph) {
  table.register_glyph(id, std::move(glyph));
  return table;
}

inline const Glyph& glyph_for(const GlyphTable& table, GlyphId id) { return table.glyph_for(id); }

/// Digits, A-Z, space and colon at the requested size.
inline GlyphTable builtin_table(FontSize size) {
  static const GlyphTable k3x5(FontSize::k3x5, parse_glyph_templates(fonts::kTemplate3x5));
  static const GlyphTable k5x7(FontSize::k5x7, parse_glyph_templates(fonts::kTemplate5x7));
  static const GlyphTable k9x11(FontSize::k9x11, parse_glyph_templates(fonts::kTemplate9x11));
  switch (size) {
    case FontSize::k3x5: return k3x5;
    case FontSize::k5x7: return k5x7;
    case FontSize::k9x11: return k9x11;
  }
  throw Error(ErrorCode::kUnsupportedSize, "unknown font size");
}

inline GlyphTable builtin_table(std::string_view label) { return builtin_table(parse_font_size(label)); }

inline Glyph logo_glyph() {
  static const Glyph logo = parse_glyph_templates(fonts::kLogoTemplate).front().second;
  return logo;
}

inline GlyphId glyph_id(char c) { return static_cast<unsigned char>(c); }

/// Draws the glyph's full rectangle: full cells get the fill char, empty cells
/// only the background. Clipped at the buffer edges.
inline void draw_glyph(ScreenBuffer& buf, const Glyph& glyph, Coord origin, const GlyphStyle& style) {
  const ScreenCell full = style.full_cell();
  const ScreenCell empty = style.empty_cell();
  for (int y = 0; y < glyph.height(); ++y) {
    for (int x = 0; x < glyph.width(); ++x) {
      const Coord at{origin.x + x, origin.y + y};
      if (buf.contains(at)) buf.put(at, glyph.full(x, y) ? full : empty);
    }
  }
}

inline ScreenBuffer render_glyph(ScreenBuffer buf, const GlyphTable& table, GlyphId id, Coord origin,
                                 const GlyphStyle& style) {
  draw_glyph(buf, table.glyph_for(id), origin, style);
  return buf;
}

namespace detail {
inline const Glyph& glyph_or_space(const GlyphTable& table, char c) {
  const GlyphId id = glyph_id(c);
  if (table.contains(id)) return table.glyph_for(id);
  return table.glyph_for(glyph_id(' '));
}
}  // namespace detail

/// One line of big text, left to right; each glyph advances by its width plus
/// `spacing`. Characters without a glyph render as space.
inline void draw_big_string(ScreenBuffer& buf, const GlyphTable& table, std::string_view text, Coord origin,
                            const GlyphStyle& style, int spacing = 1) {
  spacing = std::max(spacing, 0);
  int x = origin.x;
  for (const char c : text) {
    const Glyph& glyph = detail::glyph_or_space(table, c);
    draw_glyph(buf, glyph, {x, origin.y}, style);
    x += glyph.width() + spacing;
  }
}

inline ScreenBuffer render_big_string(ScreenBuffer buf, const GlyphTable& table, std::string_view text,
                                      Coord origin, const GlyphStyle& style, int spacing = 1) {
  draw_big_string(buf, table, text, origin, style, spacing);
  return buf;
}

inline CellSize measure(const GlyphTable& table, std::string_view text, int spacing = 1) {
  if (text.empty()) return {0, 0};
  spacing = std::max(spacing, 0);
  CellSize size{spacing * (static_cast<int>(text.size()) - 1), 0};
  for (const char c : text) {
    const Glyph& glyph = detail::glyph_or_space(table, c);
    size.width += glyph.width();
    size.height = std::max(size.height, glyph.height());
  }
  return size;
}

}  // namespace arkanoid
