// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace selfsim
{

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode
{
  ParseError = 1,
  SchemaError,
  NonPositiveLength,
  PartitionSumMismatch,
  DegenerateN,
  InvalidP,
  NotContractive,
  IndexOutOfRange,
  NotClassD1,
  IndexIsKhat,
  ReversedOrientationAtKhat,
  NotReversedD1,
  NoRoot,
  EmptyString,
  IllConditioned,
  RankDeficient,
  TooFewEigenvalues,
  TruncationLevelRequired,
  InvalidArgument,
  IoError,
};

const char *error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace selfsim
