#include "obliq/error.hpp"

namespace obliq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::FullSpace: return "FullSpace";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::NotAProjection: return "NotAProjection";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NoValidPermutation: return "NoValidPermutation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfeasibleEntries: return "InfeasibleEntries";
    case ErrorCode::BadEntry: return "BadEntry";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::BadFactorization: return "BadFactorization";
    case ErrorCode::NotAFrameOfW: return "NotAFrameOfW";
    case ErrorCode::PerturbationNotOrthogonal: return "PerturbationNotOrthogonal";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StrategyError: return "StrategyError";
  }
  return "Unknown";
}

}  // namespace obliq
