// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selfsim/number.hpp"

namespace selfsim
{

/// Unvalidated parameter set as read from a document.
struct RawParams
{
  std::vector<Number> a;
  std::vector<Number> d;
  std::vector<Number> beta;
  std::vector<bool> orient;
};

enum class Warning
{
  AllBetaZero,
};

const char *warning_name(Warning w) noexcept;

/// Validated parameters (n, a, d, beta, orient) of a similarity operator.
///
/// Indices are zero-based throughout the C++ API. `alpha()` has n+1 entries
/// running from exactly 0 to exactly 1.
class SimilarityParams
{
public:
  /// Throws Error with DegenerateN, NonPositiveLength, PartitionSumMismatch or
  /// SchemaError (length mismatch).
  static SimilarityParams create(RawParams raw);

  std::size_t n() const noexcept { return a_.size(); }
  std::span<const Number> a() const noexcept { return a_; }
  std::span<const Number> d() const noexcept { return d_; }
  std::span<const Number> beta() const noexcept { return beta_; }
  std::span<const Number> alpha() const noexcept { return alpha_; }
  const std::vector<bool> &orient() const noexcept { return orient_; }
  bool reversed(std::size_t k) const { return orient_.at(k); }

  /// True when every coefficient is an exact rational.
  bool is_exact() const noexcept { return exact_; }

  const std::vector<Warning> &warnings() const noexcept { return warnings_; }

  RawParams raw() const { return {a_, d_, beta_, orient_}; }

private:
  SimilarityParams() = default;

  std::vector<Number> a_, d_, beta_, alpha_;
  std::vector<bool> orient_;
  bool exact_ = true;
  std::vector<Warning> warnings_;
};

struct ValidationReport
{
  bool exact = true;
  std::vector<Warning> warnings;
};

/// Validates a raw parameter set; errors are thrown, condition (B) violations
/// are returned as warnings.
ValidationReport validate(const RawParams &raw);

/// Sum of a_k |d_k|^p for finite p >= 1, max |d_k| for p = +inf.
/// Exact when the parameters are exact and p is integral (or infinite).
Number contraction_norm(const SimilarityParams &params, double p);

struct ClassLabel
{
  enum class Kind
  {
    D0,
    D1,
    D2,
  };

  Kind kind;
  /// Index of the unique nonzero d for D1; unused otherwise.
  std::size_t khat = 0;

  bool operator==(const ClassLabel &) const = default;
};

const char *class_name(ClassLabel::Kind kind) noexcept;

/// Counts the nonzero d_k by exact comparison with zero.
ClassLabel classify_class(const SimilarityParams &params);

/// Index of the unique nonzero d; throws NotClassD1 for D0/D2.
std::size_t require_khat(const SimilarityParams &params);

/// Value c when the fixed point is the constant c: all beta_i (i != khat) equal c
/// and d_khat c + beta_khat = c. Throws NotClassD1.
std::optional<Number> is_trivial_constant(const SimilarityParams &params);

}  // namespace selfsim
