// SPDX-License-Identifier: Apache-2.0
#include "selfsim/error.hpp"

namespace selfsim
{

const char *error_name(ErrorCode code) noexcept
{
  switch (code)
  {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::PartitionSumMismatch: return "PartitionSumMismatch";
    case ErrorCode::DegenerateN: return "DegenerateN";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotClassD1: return "NotClassD1";
    case ErrorCode::IndexIsKhat: return "IndexIsKhat";
    case ErrorCode::ReversedOrientationAtKhat: return "ReversedOrientationAtKhat";
    case ErrorCode::NotReversedD1: return "NotReversedD1";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::EmptyString: return "EmptyString";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TooFewEigenvalues: return "TooFewEigenvalues";
    case ErrorCode::TruncationLevelRequired: return "TruncationLevelRequired";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace selfsim
