// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "selfsim/params.hpp"
#include "selfsim/step_function.hpp"

namespace selfsim
{

/// Accumulation point of the nest I_{khat,...,khat}:
/// alpha_khat / (1 - a_khat), or alpha_{khat+1} / (1 + a_khat) when the khat map
/// reverses orientation.
Number singular_point(const SimilarityParams &params);

/// Level-m nest computed from the geometric-sum closed forms.
Interval nested_interval(const SimilarityParams &params, unsigned m);

enum class SingularCase
{
  Trivial,
  C1,
  C2a,
  C2b,
  C2c,
  C3a,
  C3b,
  C4,
};

const char *case_name(SingularCase c) noexcept;

struct FiniteLimit
{
  Number value;
};

struct Jump1stKind
{
  Number left;
  Number right;
};

struct InfiniteLimit
{
  int sign;
};

struct Discontinuity2ndKind
{
};

using SingularBehavior = std::variant<FiniteLimit, Jump1stKind, InfiniteLimit, Discontinuity2ndKind>;

const char *behavior_name(const SingularBehavior &b) noexcept;

struct SingularPointReport
{
  Number xhat;
  SingularCase case_label;
  SingularBehavior kind;
  // One-sided limits that exist even though x̂ is a 2nd-kind point (case C3b).
  std::optional<Number> left_limit;
  std::optional<Number> right_limit;
};

/// Decision table for orientation-preserving khat. Throws NotClassD1 and
/// ReversedOrientationAtKhat; reversed parameters go through the squared
/// operator instead (see squaring.hpp).
SingularPointReport classify_singularity(const SimilarityParams &params);

struct InequalityWitness
{
  std::string inequality;
  Number lhs;
  Number rhs;

  std::string to_string() const;
};

struct MonotonicityVerdict
{
  bool holds;
  std::optional<InequalityWitness> witness;
};

/// Parameter criterion for a nondecreasing fixed point (class D1, either
/// orientation at khat). On failure the first violated condition is returned.
MonotonicityVerdict is_nondecreasing(const SimilarityParams &params);

/// Same criterion with the chain inequalities reversed; the sign condition on
/// d_khat is unchanged.
MonotonicityVerdict is_nonincreasing(const SimilarityParams &params);

}  // namespace selfsim
