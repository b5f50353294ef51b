#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace obliq {

/// Failure categories raised by the library. Every throwing operation reports
/// one of these through obliq::Error.
enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  RankDeficient,
  FullSpace,
  NotSymmetric,
  Singular,
  NotComplementary,
  NotAProjection,
  SupportViolation,
  NotOrthogonal,
  NotAFrame,
  NotSpanning,
  ZeroVector,
  NoValidPermutation,
  TooLarge,
  InfeasibleEntries,
  BadEntry,
  DimensionTooSmall,
  BadFactorization,
  NotAFrameOfW,
  PerturbationNotOrthogonal,
  DegenerateDirection,
  ParseError,
  StrategyError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace obliq
