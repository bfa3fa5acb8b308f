// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "selfsim/params.hpp"
#include "selfsim/singular.hpp"

namespace selfsim
{

/// Parameters of F = G o G for a class-D1 operator whose khat map reverses
/// orientation. Every map of F preserves orientation.
struct SquaredParams
{
  SimilarityParams source;
  /// Direct composition: 2n-1 pieces, the nonzero d at index n-1 (zero-based).
  SimilarityParams composed;
  /// `composed` with adjacent constant pieces of equal value merged.
  SimilarityParams canonical;
  /// Disagreements between the composition and the textbook index formulas,
  /// one line each. Informational only.
  std::vector<std::string> diagnostics;
};

/// Throws NotReversedD1 unless params is class D1 with a reversed khat map.
SquaredParams square_params(const SimilarityParams &params);

struct SquareCheck
{
  bool agrees;
  /// L_p distance between G^{2m}(0) and F^m(0).
  Number distance;
};

/// Compares the 2m-step G orbit of 0 with the m-step F orbit.
SquareCheck verify_square(const SimilarityParams &params, unsigned m, double p, const Number &tol);

/// Same comparison against a caller-supplied F.
SquareCheck verify_square(const SimilarityParams &params, const SimilarityParams &squared, unsigned m,
                          double p, const Number &tol);

/// classify_singularity for either orientation at khat: a reversed khat map is
/// classified through the composed square.
SingularPointReport classify_any_orientation(const SimilarityParams &params);

}  // namespace selfsim
