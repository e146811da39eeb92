#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arkanoid {

enum class ErrorCode {
  kInvalidDimension,
  kOutOfBounds,
  kInvalidSource,
  kShapeMismatch,
  kUnsupportedSize,
  kReservedId,
  kInvalidGlyph,
  kMissingGlyph,
  kCorruptBall,
  kInvalidSides,
  kInvalidHit,
  kLayout,
  kConfig,
  kPhase,
  kParse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDimension: return "invalid-dimension";
    case ErrorCode::kOutOfBounds: return "out-of-bounds";
    case ErrorCode::kInvalidSource: return "invalid-source";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kUnsupportedSize: return "unsupported-size";
    case ErrorCode::kReservedId: return "reserved-id";
    case ErrorCode::kInvalidGlyph: return "invalid-glyph";
    case ErrorCode::kMissingGlyph: return "missing-glyph";
    case ErrorCode::kCorruptBall: return "corrupt-ball";
    case ErrorCode::kInvalidSides: return "invalid-sides";
    case ErrorCode::kInvalidHit: return "invalid-hit";
    case ErrorCode::kLayout: return "layout";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kPhase: return "phase";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arkanoid
