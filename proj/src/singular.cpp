// SPDX-License-Identifier: Apache-2.0
#include "selfsim/singular.hpp"

#include <vector>

#include "selfsim/error.hpp"

namespace selfsim
{

const char *case_name(SingularCase c) noexcept
{
  switch (c)
  {
    case SingularCase::Trivial: return "Trivial";
    case SingularCase::C1: return "C1";
    case SingularCase::C2a: return "C2a";
    case SingularCase::C2b: return "C2b";
    case SingularCase::C2c: return "C2c";
    case SingularCase::C3a: return "C3a";
    case SingularCase::C3b: return "C3b";
    case SingularCase::C4: return "C4";
  }
  return "Unknown";
}

const char *behavior_name(const SingularBehavior &b) noexcept
{
  struct Visitor
  {
    const char *operator()(const FiniteLimit &) const { return "FiniteLimit"; }
    const char *operator()(const Jump1stKind &) const { return "Jump1stKind"; }
    const char *operator()(const InfiniteLimit &) const { return "InfiniteLimit"; }
    const char *operator()(const Discontinuity2ndKind &) const { return "Discontinuity2ndKind"; }
  };
  return std::visit(Visitor{}, b);
}

Number singular_point(const SimilarityParams &params)
{
  const std::size_t k = require_khat(params);
  const Number &a = params.a()[k];
  if (params.reversed(k))
    return params.alpha()[k + 1] / (Number(1) + a);
  return params.alpha()[k] / (Number(1) - a);
}

Interval nested_interval(const SimilarityParams &params, unsigned m)
{
  const std::size_t k = require_khat(params);
  if (m == 0)
    throw Error(ErrorCode::InvalidArgument, "nest level must be >= 1");
  const Number &a = params.a()[k];
  const Number &left_gap = params.alpha()[k];
  // A reversed map alternates which gap (left or right of segment khat) ends
  // up on the left of the next level.
  const Number right_gap = Number(1) - params.alpha()[k + 1];
  const bool rev = params.reversed(k);

  Number lo(0), scale(1);
  for (unsigned i = 0; i < m; ++i)
  {
    lo += scale * ((rev && i % 2 == 1) ? right_gap : left_gap);
    scale *= a;
  }
  return {lo, lo + scale};
}

SingularPointReport classify_singularity(const SimilarityParams &params)
{
  const std::size_t k = require_khat(params);
  if (params.reversed(k))
    throw Error(ErrorCode::ReversedOrientationAtKhat,
                "classify the squared operator for a reversed khat map");
  const std::size_t n = params.n();
  const auto beta = params.beta();
  const Number &dh = params.d()[k];
  const Number &bh = beta[k];
  const Number one(1);

  SingularPointReport r{singular_point(params), SingularCase::C1, Discontinuity2ndKind{}, {}, {}};
  if (auto c = is_trivial_constant(params))
  {
    r.case_label = SingularCase::Trivial;
    r.kind = FiniteLimit{*c};
    return r;
  }
  if (dh.abs() < one)
  {
    r.case_label = SingularCase::C1;
    r.kind = FiniteLimit{bh / (one - dh)};
  }
  else if (dh == one)
  {
    if (bh.is_zero() && n == 3 && k == 1)
    {
      r.case_label = SingularCase::C2a;
      r.kind = Jump1stKind{beta[0], beta[2]};
    }
    else if (bh.is_zero())
      r.case_label = SingularCase::C2b;
    else
    {
      r.case_label = SingularCase::C2c;
      r.kind = InfiniteLimit{bh.sign()};
    }
  }
  else if (dh > one)
  {
    const Number shift = bh / (dh - one);
    bool all_pos = true, all_neg = true;
    for (std::size_t j = 0; j < n; ++j)
    {
      if (j == k)
        continue;
      int s = (shift + beta[j]).sign();
      all_pos = all_pos && s > 0;
      all_neg = all_neg && s < 0;
    }
    if (all_pos || all_neg)
    {
      r.case_label = SingularCase::C3a;
      r.kind = InfiniteLimit{all_pos ? 1 : -1};
    }
    else
    {
      r.case_label = SingularCase::C3b;
      if (k == 1 && dh * beta[0] + bh == beta[0])
        r.left_limit = beta[0];
      if (k + 2 == n && dh * beta[n - 1] + bh == beta[n - 1])
        r.right_limit = beta[n - 1];
    }
  }
  else
    r.case_label = SingularCase::C4;
  return r;
}

std::string InequalityWitness::to_string() const
{
  return inequality + " fails: " + lhs.to_string() + " vs " + rhs.to_string();
}

namespace
{

struct Term
{
  std::string label;
  Number value;
};

std::string idx(std::size_t i) { return std::to_string(i + 1); }

MonotonicityVerdict check_monotone(const SimilarityParams &params, bool increasing)
{
  const std::size_t k = require_khat(params);
  if (is_trivial_constant(params))
    return {true, std::nullopt};

  const std::size_t n = params.n();
  const auto beta = params.beta();
  const Number &dh = params.d()[k];
  const Number &bh = beta[k];
  const bool rev = params.reversed(k);
  const std::string dl = "d[" + idx(k) + "]", bl = "beta[" + idx(k) + "]";

  auto map_once = [&](const Term &t) {
    return Term{dl + "*" + t.label + "+" + bl, dh * t.value + bh};
  };
  auto plain = [&](std::size_t i) { return Term{"beta[" + idx(i) + "]", beta[i]}; };

  if (rev ? !(dh.sign() < 0) : !(dh.sign() > 0))
    return {false, InequalityWitness{dl + (rev ? " < 0" : " > 0"), dh, Number(0)}};

  std::vector<Term> chain;
  for (std::size_t i = 0; i < k; ++i)
    chain.push_back(plain(i));
  const Term first = plain(0), last = plain(n - 1);
  if (k == 0)
  {
    Term inner = map_once(last);
    chain.push_back(inner);
    if (rev)
      chain.push_back(map_once(Term{"(" + inner.label + ")", inner.value}));
  }
  else if (k == n - 1)
  {
    Term inner = map_once(first);
    if (rev)
      chain.push_back(map_once(Term{"(" + inner.label + ")", inner.value}));
    chain.push_back(inner);
  }
  else if (rev)
  {
    chain.push_back(map_once(last));
    chain.push_back(map_once(first));
  }
  else
  {
    chain.push_back(map_once(first));
    chain.push_back(map_once(last));
  }
  for (std::size_t i = k + 1; i < n; ++i)
    chain.push_back(plain(i));

  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
  {
    const auto &lhs = chain[i];
    const auto &rhs = chain[i + 1];
    const bool ok = increasing ? lhs.value <= rhs.value : lhs.value >= rhs.value;
    if (!ok)
      return {false, InequalityWitness{lhs.label + (increasing ? " <= " : " >= ") + rhs.label,
                                       lhs.value, rhs.value}};
  }
  return {true, std::nullopt};
}

}  // namespace

MonotonicityVerdict is_nondecreasing(const SimilarityParams &params)
{
  return check_monotone(params, true);
}

MonotonicityVerdict is_nonincreasing(const SimilarityParams &params)
{
  return check_monotone(params, false);
}

}  // namespace selfsim
