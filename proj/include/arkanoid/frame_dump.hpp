#pragma once

// Plain-text frame dump used for golden tests and replay hashing.
//
//   <width> <height>\n
//   <height> lines of <width> raw char bytes (code 0 written as '.')\n
//   <height> lines of <width> two-digit lowercase hex attribute bytes\n
//
// Char rows are read back by byte count, not by line, so codes such as 0x0A
// survive a round trip.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "arkanoid/error.hpp"
#include "arkanoid/screen.hpp"

namespace arkanoid {

inline std::string dump_frame(const ScreenBuffer& buf) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(buf.width()) + " " + std::to_string(buf.height()) + "\n";
  const auto& cells = buf.cells();
  const std::size_t w = static_cast<std::size_t>(buf.width());
  out.reserve(out.size() + cells.size() * 3 + 2 * static_cast<std::size_t>(buf.height()));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::uint8_t code = cells[i].char_code;
    out.push_back(code == 0 ? '.' : static_cast<char>(code));
    if ((i + 1) % w == 0) out.push_back('\n');
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out.push_back(kHex[cells[i].attrs >> 4]);
    out.push_back(kHex[cells[i].attrs & 0x0F]);
    if ((i + 1) % w == 0) out.push_back('\n');
  }
  return out;
}

/// Inverse of dump_frame. A '.' reads back as code 0 (the dump cannot tell a
/// literal '.' from an empty cell).
inline ScreenBuffer parse_frame(std::string_view text) {
  auto fail = [](const std::string& why) -> Error { return Error(ErrorCode::kParse, "frame dump: " + why); };
  const auto eol = text.find('\n');
  if (eol == std::string_view::npos) throw fail("missing header line");
  std::istringstream header{std::string(text.substr(0, eol))};
  int w = 0;
  int h = 0;
  if (!(header >> w >> h) || w < 1 || h < 1) throw fail("bad header");
  ScreenBuffer buf(w, h);
  std::size_t pos = eol + 1;
  auto expect_newline = [&] {
    if (pos >= text.size() || text[pos] != '\n') throw fail("row length mismatch");
    ++pos;
  };
  for (int y = 0; y < h; ++y) {
    if (pos + static_cast<std::size_t>(w) > text.size()) throw fail("truncated char rows");
    for (int x = 0; x < w; ++x) {
      const auto code = static_cast<std::uint8_t>(text[pos++]);
      buf.put({x, y}, ScreenCell{code == '.' ? std::uint8_t{0} : code, 0});
    }
    expect_newline();
  }
  auto nibble = [&](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    throw fail("bad hex digit");
  };
  for (int y = 0; y < h; ++y) {
    if (pos + 2 * static_cast<std::size_t>(w) > text.size()) throw fail("truncated attribute rows");
    for (int x = 0; x < w; ++x) {
      const std::uint8_t attrs = static_cast<std::uint8_t>((nibble(text[pos]) << 4) | nibble(text[pos + 1]));
      pos += 2;
      buf.put({x, y}, ScreenCell{buf.at({x, y}).char_code, attrs});
    }
    expect_newline();
  }
  if (pos != text.size()) throw fail("trailing data");
  return buf;
}

/// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char c : bytes) {
    hash ^= static_cast<std::uint8_t>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

inline std::uint64_t frame_hash(const ScreenBuffer& buf) { return fnv1a64(dump_frame(buf)); }

inline std::string hex64(std::uint64_t v) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = kHex[v & 0x0F];
  return s;
}

}  // namespace arkanoid
