// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "selfsim/params.hpp"
#include "selfsim/step_function.hpp"

namespace selfsim
{

/// Address k_1, ..., k_m of a refinement interval (zero-based indices). The
/// interval is the image of [0,1] under phi_{k_1} o ... o phi_{k_m}, where
/// phi_k(t) = a_k t + alpha_k, or alpha_{k+1} - a_k t for a reversed map.
struct RefinementAddress
{
  std::vector<std::size_t> indices;

  static RefinementAddress repeated(std::size_t index, unsigned times)
  {
    return {std::vector<std::size_t>(times, index)};
  }
};

Interval address_to_interval(const SimilarityParams &params, const RefinementAddress &addr);

/// One application of the similarity operator to a step function.
StepFunction apply_operator(const SimilarityParams &params, const StepFunction &f);

/// f_m = G^m(0). Throws NotContractive unless contraction_norm(params, p) < 1.
StepFunction iterate_fixed_point(const SimilarityParams &params, unsigned m, double p = 1.0);

/// G^m(f) without a contraction check.
StepFunction iterate_from(const SimilarityParams &params, StepFunction f, unsigned m);

/// Plateau of the fixed point on the i-th child (from the left) of the nest of
/// depth j-1, i.e. on I(j, i). Class D1 only; throws IndexIsKhat when that child
/// is the next nest interval.
Number closed_form_level(const SimilarityParams &params, unsigned j, std::size_t i);

/// The level-m nest I_{khat, ..., khat} (class D1).
Interval nest_interval(const SimilarityParams &params, unsigned m);

/// Parts of f_m that already coincide with the fixed point: everything left
/// and right of the level-m nest for D1, everything for D0.
struct SettledRegion
{
  std::vector<Piece> left;
  std::vector<Piece> right;
};

SettledRegion settled_region(const SimilarityParams &params, const StepFunction &fm, unsigned m);

}  // namespace selfsim
