// SPDX-License-Identifier: Apache-2.0
#include "selfsim/step_function.hpp"

#include <algorithm>
#include <cmath>

#include "selfsim/error.hpp"

namespace selfsim
{

void append_merged(std::vector<Piece> &out, Piece piece)
{
  if (!(piece.left < piece.right))
    return;
  if (!out.empty() && out.back().value == piece.value && out.back().right == piece.left)
  {
    out.back().right = std::move(piece.right);
    return;
  }
  out.push_back(std::move(piece));
}

StepFunction StepFunction::constant(const Number &value)
{
  StepFunction f;
  f.breakpoints_ = {Number(0), Number(1)};
  f.values_ = {value};
  return f;
}

StepFunction StepFunction::from_pieces(std::span<const Piece> pieces)
{
  std::vector<Piece> merged;
  merged.reserve(pieces.size());
  for (const auto &p : pieces)
  {
    if (!(p.left < p.right))
      throw Error(ErrorCode::InvalidArgument, "piece with empty or inverted support");
    if (!merged.empty() && !(merged.back().right == p.left))
      throw Error(ErrorCode::InvalidArgument, "pieces are not contiguous");
    append_merged(merged, p);
  }
  if (merged.empty() || !merged.front().left.is_zero() || !(merged.back().right == Number(1)))
    throw Error(ErrorCode::InvalidArgument, "pieces do not tile [0,1]");

  StepFunction f;
  f.breakpoints_.reserve(merged.size() + 1);
  f.values_.reserve(merged.size());
  f.breakpoints_.push_back(merged.front().left);
  for (auto &p : merged)
  {
    f.breakpoints_.push_back(std::move(p.right));
    f.values_.push_back(std::move(p.value));
  }
  return f;
}

std::vector<Piece> StepFunction::pieces() const
{
  std::vector<Piece> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j)
    out.push_back(piece(j));
  return out;
}

Number StepFunction::evaluate(const Number &x) const
{
  if (x < Number(0) || x > Number(1))
    throw Error(ErrorCode::InvalidArgument, "evaluation point outside [0,1]");
  // First breakpoint >= x closes the plateau that owns x.
  auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), x,
                             [](const Number &b, const Number &v) { return b < v; });
  auto j = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return values_[std::min(j, values_.size() - 1)];
}

std::vector<Piece> StepFunction::restrict_to(const Interval &window) const
{
  std::vector<Piece> out;
  for (std::size_t j = 0; j < size(); ++j)
  {
    if (!(breakpoints_[j + 1] > window.lo))
      continue;
    if (!(breakpoints_[j] < window.hi))
      break;
    append_merged(out, {max(breakpoints_[j], window.lo), min(breakpoints_[j + 1], window.hi), values_[j]});
  }
  return out;
}

Number lp_distance(const StepFunction &f, const StepFunction &g, double p)
{
  if (std::isnan(p) || p < 1.0)
    throw Error(ErrorCode::InvalidP, "p must lie in [1, inf]");
  const bool sup = std::isinf(p);
  const bool l1 = p == 1.0;

  Number exact_acc(0);
  double float_acc = 0.0;
  std::size_t i = 0, j = 0;
  Number left(0);
  while (i < f.size() && j < g.size())
  {
    const Number &fr = f.breakpoints()[i + 1];
    const Number &gr = g.breakpoints()[j + 1];
    Number right = min(fr, gr);
    Number diff = (f.values()[i] - g.values()[j]).abs();
    if (sup)
      exact_acc = max(exact_acc, diff);
    else if (l1)
      exact_acc += diff * (right - left);
    else
      float_acc += std::pow(diff.to_double(), p) * (right - left).to_double();
    if (fr == right)
      ++i;
    if (gr == right)
      ++j;
    left = std::move(right);
  }
  if (sup || l1)
    return exact_acc;
  return Number(std::pow(float_acc, 1.0 / p));
}

}  // namespace selfsim
