// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ento {

// Typed failure modes surfaced by the library. The C API maps these 1:1 to
// status codes; the name string is stable and machine-readable.
enum class ErrorCode {
  EmptySignal,
  InvalidCutoff,
  SegmentTooLong,
  InvalidOverlap,
  InvalidHop,
  NoPeak,
  ZeroSpeed,
  InvalidBeamRange,
  InsufficientFrames,
  AliasedScenario,
  NoModalities,
  ZeroSpectrum,
  EmptyTable,
  LengthMismatch,
  NotNormalized,
  SingleClass,
  DimensionMismatch,
  MissingModality,
  BadDescriptor,
  ParseError,
  DuplicateId,
  MissingFile,
  EmptySpec,
  UnknownSpecies,
  Empty,
  InvalidWav,
  MultichannelWav,
  InvalidArgument,
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace ento
