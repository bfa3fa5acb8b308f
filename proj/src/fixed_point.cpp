// SPDX-License-Identifier: Apache-2.0
#include "selfsim/fixed_point.hpp"

#include <cmath>

#include "selfsim/error.hpp"

namespace selfsim
{

Interval address_to_interval(const SimilarityParams &params, const RefinementAddress &addr)
{
  if (addr.indices.empty())
    throw Error(ErrorCode::InvalidArgument, "refinement address must have order >= 1");
  Interval iv{Number(0), Number(1)};
  for (auto it = addr.indices.rbegin(); it != addr.indices.rend(); ++it)
  {
    const std::size_t k = *it;
    if (k >= params.n())
      throw Error(ErrorCode::IndexOutOfRange, "address index " + std::to_string(k) +
                                                  " with n = " + std::to_string(params.n()));
    const Number &a = params.a()[k];
    if (params.reversed(k))
      iv = {params.alpha()[k + 1] - a * iv.hi, params.alpha()[k + 1] - a * iv.lo};
    else
      iv = {params.alpha()[k] + a * iv.lo, params.alpha()[k] + a * iv.hi};
  }
  return iv;
}

StepFunction apply_operator(const SimilarityParams &params, const StepFunction &f)
{
  std::vector<Piece> out;
  out.reserve(params.n() * (f.size() + 1));
  const auto xs = f.breakpoints();
  const auto vs = f.values();
  const std::size_t m = f.size();

  for (std::size_t k = 0; k < params.n(); ++k)
  {
    const Number &lo = params.alpha()[k];
    const Number &hi = params.alpha()[k + 1];
    const Number &a = params.a()[k];
    const Number &d = params.d()[k];
    const Number &b = params.beta()[k];
    if (d.is_zero())
    {
      append_merged(out, {lo, hi, b});
      continue;
    }
    // Segment endpoints are taken from alpha so the tiling stays exact in
    // floating-point mode too.
    Number left = lo;
    for (std::size_t j = 0; j < m; ++j)
    {
      const bool last = j + 1 == m;
      if (params.reversed(k))
      {
        const std::size_t src = m - 1 - j;
        Number right = last ? hi : hi - a * xs[src];
        append_merged(out, {left, right, b + d * vs[src]});
        left = std::move(right);
      }
      else
      {
        Number right = last ? hi : lo + a * xs[j + 1];
        append_merged(out, {left, right, b + d * vs[j]});
        left = std::move(right);
      }
    }
  }
  return StepFunction::from_pieces(out);
}

StepFunction iterate_from(const SimilarityParams &params, StepFunction f, unsigned m)
{
  for (unsigned i = 0; i < m; ++i)
    f = apply_operator(params, f);
  return f;
}

StepFunction iterate_fixed_point(const SimilarityParams &params, unsigned m, double p)
{
  Number r = contraction_norm(params, p);
  if (!(r < Number(1)))
    throw Error(ErrorCode::NotContractive, "contraction norm " + r.to_string() + " >= 1 for p = " +
                                               Number(p).to_string());
  return iterate_from(params, StepFunction::constant(params.is_exact() ? Number(0) : Number(0.0)), m);
}

Number closed_form_level(const SimilarityParams &params, unsigned j, std::size_t i)
{
  const std::size_t khat = require_khat(params);
  const std::size_t n = params.n();
  if (j == 0)
    throw Error(ErrorCode::InvalidArgument, "level j must be >= 1");
  if (i >= n)
    throw Error(ErrorCode::IndexOutOfRange, "child index " + std::to_string(i));
  // Below an odd number of reversals the children appear in mirrored order.
  const std::size_t source = (params.reversed(khat) && j % 2 == 0) ? n - 1 - i : i;
  if (source == khat)
    throw Error(ErrorCode::IndexIsKhat, "child " + std::to_string(i) + " at level " +
                                            std::to_string(j) + " is the nest itself");
  const Number &dh = params.d()[khat];
  const Number &bh = params.beta()[khat];
  const Number &bi = params.beta()[source];
  if (dh == Number(1))
    return Number(static_cast<long>(j - 1)) * bh + bi;
  Number shift = bh / (dh - Number(1));
  return pow(dh, j - 1) * (shift + bi) - shift;
}

Interval nest_interval(const SimilarityParams &params, unsigned m)
{
  return address_to_interval(params, RefinementAddress::repeated(require_khat(params), m));
}

SettledRegion settled_region(const SimilarityParams &params, const StepFunction &fm, unsigned m)
{
  auto cls = classify_class(params);
  if (cls.kind == ClassLabel::Kind::D0)
    return {fm.pieces(), {}};
  if (cls.kind != ClassLabel::Kind::D1)
    throw Error(ErrorCode::NotClassD1, "settled region needs class D0 or D1");
  Interval nest = nest_interval(params, m);
  if (!params.is_exact())
  {
    // Composed addresses and iterated breakpoints may differ by rounding.
    auto snap = [&](Number &x) {
      for (const auto &b : fm.breakpoints())
        if (std::fabs((b - x).to_double()) <= 1e-12)
        {
          x = b;
          return;
        }
    };
    snap(nest.lo);
    snap(nest.hi);
  }
  return {fm.restrict_to({Number(0), nest.lo}), fm.restrict_to({nest.hi, Number(1)})};
}

}  // namespace selfsim
