// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace enerfwd {

enum class ErrorCode {
  // Input validation.
  NonPositiveBeta,
  NonPositiveSigmaFactor,
  SeasonalityNotPositive,
  UnsortedKnots,
  StateLengthMismatch,
  NonPositiveHalfLife,
  EmptyHorizon,
  TimeOrderViolation,
  UnsortedGrid,
  BadNodeCount,
  InvalidSubset,
  InvalidInput,
  ParseError,
  // Valid inputs outside what the closed forms cover.
  NonzeroRateUnsupported,
  ZeroSigmaB,
  RegimeNotCovered,
  ZeroVolatility,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors that signal a well-formed request the analytics refuse
/// (as opposed to malformed input).
bool is_unsupported(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace enerfwd
