#pragma once

#include <stdexcept>
#include <string>

namespace dooroute {

// Error codes surfaced by the library. The CLI maps InvalidInput-derived
// failures to exit code 2 and NoProgress to exit code 3.
enum class ErrorCode {
  NonSimplePolygon,
  WrongOrientation,
  HoleOutsideBoundary,
  OverlappingHoles,
  BadPredecomposition,
  DegeneratePolygon,
  TriangulationFailure,
  EntranceInHole,
  UnknownVertex,
  Unreachable,
  EmptyPolyline,
  BadTunnelTag,
  SpanOutOfRange,
  NoProgress,
  DegenerateSplice,
  GenerationFailure,
  BadInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dooroute
