// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "selfsim/number.hpp"

namespace selfsim
{

struct Interval
{
  Number lo;
  Number hi;

  Number length() const { return hi - lo; }
  bool contains(const Number &x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval &) const = default;
};

/// Constant `value` on the open interval (left, right).
struct Piece
{
  Number left;
  Number right;
  Number value;
};

/// Piecewise-constant function on [0,1] in canonical form: breakpoints strictly
/// increasing from 0 to 1, adjacent plateaus always distinct.
class StepFunction
{
public:
  static StepFunction constant(const Number &value);

  /// Builds from consecutive pieces that tile [0,1]; merges equal neighbours.
  /// Throws InvalidArgument when the pieces do not tile [0,1].
  static StepFunction from_pieces(std::span<const Piece> pieces);

  std::span<const Number> breakpoints() const noexcept { return breakpoints_; }
  std::span<const Number> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Piece piece(std::size_t j) const { return {breakpoints_[j], breakpoints_[j + 1], values_[j]}; }
  std::vector<Piece> pieces() const;

  /// Value at x; on a breakpoint the left limit is returned, at x = 0 the first
  /// plateau.
  Number evaluate(const Number &x) const;

  /// Pieces clipped to [lo, hi], merged where adjacent values coincide.
  std::vector<Piece> restrict_to(const Interval &window) const;

  bool operator==(const StepFunction &) const = default;

private:
  std::vector<Number> breakpoints_;
  std::vector<Number> values_;
};

/// Appends a piece to a run of pieces, merging it into the previous one when
/// the values agree. Zero-length pieces are dropped.
void append_merged(std::vector<Piece> &out, Piece piece);

/// L_p norm of f - g for p in [1, inf]. Exact for p = 1 and p = inf when both
/// functions are exact; a double otherwise.
Number lp_distance(const StepFunction &f, const StepFunction &g, double p);

}  // namespace selfsim
