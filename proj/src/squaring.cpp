// SPDX-License-Identifier: Apache-2.0
#include "selfsim/squaring.hpp"

#include <sstream>

#include "selfsim/error.hpp"
#include "selfsim/fixed_point.hpp"
#include "selfsim/step_function.hpp"

namespace selfsim
{

namespace
{

struct PieceParams
{
  Number a, d, beta;
};

SimilarityParams build(const std::vector<PieceParams> &pieces)
{
  RawParams raw;
  for (const auto &p : pieces)
  {
    raw.a.push_back(p.a);
    raw.d.push_back(p.d);
    raw.beta.push_back(p.beta);
    raw.orient.push_back(false);
  }
  return SimilarityParams::create(std::move(raw));
}

// The closed-form index display reads
//   a(F)_{m+k} = a_khat a_{n-k},  beta(F)_{m+k} = d_khat beta_{n-k},  k = 0..n-1,
// with m = n, which starts the children at position n instead of khat and
// drops the additive beta_khat. Each mismatch with the composition is logged.
std::vector<std::string> compare_with_index_formulas(const SimilarityParams &g,
                                                     const std::vector<PieceParams> &composed)
{
  std::vector<std::string> out;
  const std::size_t n = g.n(), k = require_khat(g);
  const std::size_t N = 2 * n - 1;
  if (composed.size() != N)
    out.push_back("piece count " + std::to_string(composed.size()) + " differs from 2n-1 = " +
                  std::to_string(N));
  for (std::size_t j = 0; j < n; ++j)
  {
    // Literal index (one-based) and the one the composition uses.
    const std::size_t literal = n + j, actual = k + 1 + j;
    const Number lit_a = g.a()[k] * g.a()[n - 1 - j];
    const Number lit_beta = g.d()[k] * g.beta()[n - 1 - j];
    const auto &child = composed[k + j];
    std::ostringstream line;
    if (literal != actual)
      line << "child " << j << ": display index " << literal << ", composed index " << actual << "; ";
    if (!(lit_a == child.a))
      line << "a " << lit_a << " vs " << child.a << "; ";
    if (!(lit_beta == child.beta))
      line << "beta " << lit_beta << " (display) vs " << child.beta << " (composed)";
    if (!line.str().empty())
      out.push_back(line.str());
  }
  const std::size_t tail_literal = n - k;  // k = 0..n-khat in one-based terms
  const std::size_t tail_actual = n - 1 - k;
  if (tail_literal != tail_actual)
    out.push_back("trailing block: display lists " + std::to_string(tail_literal) + " pieces, composition has " +
                  std::to_string(tail_actual));
  return out;
}

}  // namespace

SquaredParams square_params(const SimilarityParams &params)
{
  const ClassLabel cls = classify_class(params);
  if (cls.kind != ClassLabel::Kind::D1 || !params.reversed(cls.khat))
    throw Error(ErrorCode::NotReversedD1, "squaring needs class D1 with a reversed khat map");
  const std::size_t n = params.n(), k = cls.khat;
  const Number &ah = params.a()[k], &dh = params.d()[k], &bh = params.beta()[k];

  std::vector<PieceParams> pieces;
  for (std::size_t i = 0; i < k; ++i)
    pieces.push_back({params.a()[i], Number(0), params.beta()[i]});
  // The reversed khat map lays the children of G out right to left.
  for (std::size_t j = n; j-- > 0;)
  {
    const Number child_d = j == k ? dh * dh : Number(0);
    pieces.push_back({ah * params.a()[j], child_d, bh + dh * params.beta()[j]});
  }
  for (std::size_t i = k + 1; i < n; ++i)
    pieces.push_back({params.a()[i], Number(0), params.beta()[i]});

  std::vector<PieceParams> merged;
  for (const auto &p : pieces)
  {
    if (!merged.empty() && merged.back().d.is_zero() && p.d.is_zero() && merged.back().beta == p.beta)
      merged.back().a += p.a;
    else
      merged.push_back(p);
  }

  return SquaredParams{params, build(pieces), build(merged), compare_with_index_formulas(params, pieces)};
}

SquareCheck verify_square(const SimilarityParams &params, const SimilarityParams &squared, unsigned m,
                          double p, const Number &tol)
{
  const Number zero = params.is_exact() ? Number(0) : Number(0.0);
  const auto g_orbit = iterate_from(params, StepFunction::constant(zero), 2 * m);
  const auto f_orbit = iterate_from(squared, StepFunction::constant(zero), m);
  Number dist = lp_distance(g_orbit, f_orbit, p);
  const bool ok = dist <= tol;
  return {ok, std::move(dist)};
}

SquareCheck verify_square(const SimilarityParams &params, unsigned m, double p, const Number &tol)
{
  return verify_square(params, square_params(params).canonical, m, p, tol);
}

SingularPointReport classify_any_orientation(const SimilarityParams &params)
{
  const std::size_t k = require_khat(params);
  if (!params.reversed(k))
    return classify_singularity(params);
  return classify_singularity(square_params(params).composed);
}

}  // namespace selfsim
