// SPDX-License-Identifier: Apache-2.0

#include "ento/error.hpp"

namespace ento {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySignal: return "EmptySignal";
    case ErrorCode::InvalidCutoff: return "InvalidCutoff";
    case ErrorCode::SegmentTooLong: return "SegmentTooLong";
    case ErrorCode::InvalidOverlap: return "InvalidOverlap";
    case ErrorCode::InvalidHop: return "InvalidHop";
    case ErrorCode::NoPeak: return "NoPeak";
    case ErrorCode::ZeroSpeed: return "ZeroSpeed";
    case ErrorCode::InvalidBeamRange: return "InvalidBeamRange";
    case ErrorCode::InsufficientFrames: return "InsufficientFrames";
    case ErrorCode::AliasedScenario: return "AliasedScenario";
    case ErrorCode::NoModalities: return "NoModalities";
    case ErrorCode::ZeroSpectrum: return "ZeroSpectrum";
    case ErrorCode::EmptyTable: return "EmptyTable";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MissingModality: return "MissingModality";
    case ErrorCode::BadDescriptor: return "BadDescriptor";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::UnknownSpecies: return "UnknownSpecies";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::InvalidWav: return "InvalidWav";
    case ErrorCode::MultichannelWav: return "MultichannelWav";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ento
