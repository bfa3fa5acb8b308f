// SPDX-License-Identifier: Apache-2.0
#include "selfsim/params.hpp"

#include <cmath>
#include <limits>

#include "selfsim/error.hpp"

namespace selfsim
{

const char *warning_name(Warning w) noexcept
{
  switch (w)
  {
    case Warning::AllBetaZero: return "AllBetaZero";
  }
  return "Unknown";
}

const char *class_name(ClassLabel::Kind kind) noexcept
{
  switch (kind)
  {
    case ClassLabel::Kind::D0: return "D0";
    case ClassLabel::Kind::D1: return "D1";
    case ClassLabel::Kind::D2: return "D2";
  }
  return "Unknown";
}

SimilarityParams SimilarityParams::create(RawParams raw)
{
  const std::size_t n = raw.a.size();
  if (raw.orient.empty())
    raw.orient.assign(n, false);
  if (raw.d.size() != n || raw.beta.size() != n || raw.orient.size() != n)
    throw Error(ErrorCode::SchemaError, "a, d, beta and orient must all have n entries");
  if (n < 2)
    throw Error(ErrorCode::DegenerateN, "n = " + std::to_string(n) + ", need n >= 2");

  SimilarityParams p;
  Number sum(0);
  for (std::size_t k = 0; k < n; ++k)
  {
    if (raw.a[k].sign() <= 0)
      throw Error(ErrorCode::NonPositiveLength,
                  "a[" + std::to_string(k + 1) + "] = " + raw.a[k].to_string());
    sum += raw.a[k];
  }
  for (const auto *v : {&raw.a, &raw.d, &raw.beta})
    for (const auto &x : *v)
    {
      p.exact_ = p.exact_ && x.is_exact();
      if (!x.is_exact() && !std::isfinite(x.to_double()))
        throw Error(ErrorCode::SchemaError, "non-finite coefficient");
    }

  if (p.exact_ ? !(sum == Number(1)) : std::fabs(sum.to_double() - 1.0) > 1e-15)
    throw Error(ErrorCode::PartitionSumMismatch, "sum of a = " + sum.to_string());

  p.alpha_.reserve(n + 1);
  p.alpha_.push_back(p.exact_ ? Number(0) : Number(0.0));
  for (std::size_t k = 0; k + 1 < n; ++k)
    p.alpha_.push_back(p.alpha_.back() + raw.a[k]);
  p.alpha_.push_back(p.exact_ ? Number(1) : Number(1.0));
  for (std::size_t k = 0; k < n; ++k)
    if (!(p.alpha_[k] < p.alpha_[k + 1]))
      throw Error(ErrorCode::PartitionSumMismatch, "partition points are not increasing");

  bool all_zero = true;
  for (const auto &b : raw.beta)
    all_zero = all_zero && b.is_zero();
  if (all_zero)
    p.warnings_.push_back(Warning::AllBetaZero);

  p.a_ = std::move(raw.a);
  p.d_ = std::move(raw.d);
  p.beta_ = std::move(raw.beta);
  p.orient_ = std::move(raw.orient);
  return p;
}

ValidationReport validate(const RawParams &raw)
{
  auto p = SimilarityParams::create(raw);
  return {p.is_exact(), p.warnings()};
}

Number contraction_norm(const SimilarityParams &params, double p)
{
  if (std::isnan(p) || p < 1.0)
    throw Error(ErrorCode::InvalidP, "p must lie in [1, inf]");
  if (std::isinf(p))
  {
    Number m(0);
    for (const auto &d : params.d())
      m = max(m, d.abs());
    return m;
  }
  Number total(0);
  const bool integral = p == std::floor(p) && p <= 64.0;
  for (std::size_t k = 0; k < params.n(); ++k)
  {
    Number term = integral ? pow(params.d()[k].abs(), static_cast<unsigned>(p))
                           : Number(std::pow(std::fabs(params.d()[k].to_double()), p));
    total += params.a()[k] * term;
  }
  return total;
}

ClassLabel classify_class(const SimilarityParams &params)
{
  std::size_t count = 0, last = 0;
  for (std::size_t k = 0; k < params.n(); ++k)
    if (!params.d()[k].is_zero())
    {
      ++count;
      last = k;
    }
  if (count == 0)
    return {ClassLabel::Kind::D0, 0};
  if (count == 1)
    return {ClassLabel::Kind::D1, last};
  return {ClassLabel::Kind::D2, 0};
}

std::size_t require_khat(const SimilarityParams &params)
{
  auto cls = classify_class(params);
  if (cls.kind != ClassLabel::Kind::D1)
    throw Error(ErrorCode::NotClassD1,
                std::string("parameters are of class ") + class_name(cls.kind));
  return cls.khat;
}

std::optional<Number> is_trivial_constant(const SimilarityParams &params)
{
  const std::size_t khat = require_khat(params);
  const auto beta = params.beta();
  const Number &c = beta[khat == 0 ? 1 : 0];
  for (std::size_t i = 0; i < params.n(); ++i)
    if (i != khat && !(beta[i] == c))
      return std::nullopt;
  if (params.d()[khat] * c + beta[khat] == c)
    return c;
  return std::nullopt;
}

}  // namespace selfsim
