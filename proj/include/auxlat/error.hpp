#pragma once

#include <stdexcept>
#include <string>

namespace auxlat {

enum class ErrorCode {
  // parsing
  MalformedHeader,
  BadRowLength,
  BadCharacter,
  NegativeHeight,
  RaggedRows,
  // counting
  SizeLimitExceeded,
  DimensionMismatch,
  // scaling
  InsufficientPoints,
  DegenerateRegression,
  // kinematics
  OverCompressed,
  GeometricInterference,
  InvalidEncoding,
  DegenerateInterval,
  NonSmoothTiling,
  // design
  SlopeUnachievable,
  SpanExceeded,
  NotSingleValued,
  GenerationDiverged,
  InvalidIntermediate,
  HeightStepTooLarge,
  UnknownGlyph,
  // tooling
  IoError,
  BadArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace auxlat
