// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/errors.hpp"

namespace enerfwd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveBeta: return "NonPositiveBeta";
    case ErrorCode::NonPositiveSigmaFactor: return "NonPositiveSigmaFactor";
    case ErrorCode::SeasonalityNotPositive: return "SeasonalityNotPositive";
    case ErrorCode::UnsortedKnots: return "UnsortedKnots";
    case ErrorCode::StateLengthMismatch: return "StateLengthMismatch";
    case ErrorCode::NonPositiveHalfLife: return "NonPositiveHalfLife";
    case ErrorCode::EmptyHorizon: return "EmptyHorizon";
    case ErrorCode::TimeOrderViolation: return "TimeOrderViolation";
    case ErrorCode::UnsortedGrid: return "UnsortedGrid";
    case ErrorCode::BadNodeCount: return "BadNodeCount";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonzeroRateUnsupported: return "NonzeroRateUnsupported";
    case ErrorCode::ZeroSigmaB: return "ZeroSigmaB";
    case ErrorCode::RegimeNotCovered: return "RegimeNotCovered";
    case ErrorCode::ZeroVolatility: return "ZeroVolatility";
  }
  return "Unknown";
}

bool is_unsupported(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonzeroRateUnsupported:
    case ErrorCode::ZeroSigmaB:
    case ErrorCode::RegimeNotCovered:
    case ErrorCode::ZeroVolatility:
      return true;
    default:
      return false;
  }
}

}  // namespace enerfwd
