// SPDX-License-Identifier: Apache-2.0
#include "selfsim/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "selfsim/error.hpp"

namespace selfsim
{

using cplx = std::complex<double>;

cplx polynomial_value(std::span<const double> coeffs, cplx z)
{
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

double relative_residual(std::span<const double> coeffs, cplx z)
{
  // Evaluate in the reversed variable for |z| > 1 so large roots of high
  // degree polynomials do not overflow: p(z) = z^N q(1/z).
  const double r = std::abs(z);
  cplx acc = 0.0;
  double scale = 0.0;
  if (r <= 1.0)
  {
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    {
      acc = acc * z + *it;
      scale = scale * r + std::abs(*it);
    }
  }
  else
  {
    const cplx w = 1.0 / z;
    const double rw = 1.0 / r;
    for (double c : coeffs)
    {
      acc = acc * w + c;
      scale = scale * rw + std::abs(c);
    }
  }
  return scale > 0.0 ? std::abs(acc) / scale : std::abs(acc);
}

namespace
{

// Newton correction p(z)/p'(z).
cplx newton_ratio(std::span<const double> c, cplx z)
{
  const std::size_t n = c.size() - 1;
  if (std::abs(z) <= 1.0)
  {
    cplx p = c[n], dp = 0.0;
    for (std::size_t k = n; k-- > 0;)
    {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    return p / dp;
  }
  // q(w) = sum c_k w^{N-k}; p/p' = z q / (N q - w q').
  const cplx w = 1.0 / z;
  cplx q = c[0], dq = 0.0;
  for (std::size_t k = 1; k <= n; ++k)
  {
    dq = dq * w + q;
    q = q * w + c[k];
  }
  return z * q / (static_cast<double>(n) * q - w * dq);
}

std::vector<cplx> initial_guesses(std::span<const double> c)
{
  const std::size_t n = c.size() - 1;
  std::vector<std::size_t> idx;
  std::vector<double> logs;
  for (std::size_t k = 0; k <= n; ++k)
    if (c[k] != 0.0)
    {
      idx.push_back(k);
      logs.push_back(std::log(std::abs(c[k])));
    }
  // Upper convex hull of (k, log|c_k|).
  std::vector<std::size_t> hull;
  for (std::size_t t = 0; t < idx.size(); ++t)
  {
    while (hull.size() >= 2)
    {
      auto a = hull[hull.size() - 2], b = hull.back();
      double cross = (static_cast<double>(idx[b]) - idx[a]) * (logs[t] - logs[a]) -
                     (logs[b] - logs[a]) * (static_cast<double>(idx[t]) - idx[a]);
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(t);
  }

  std::vector<cplx> z;
  z.reserve(n);
  // Leading zero coefficients give roots at the origin.
  for (std::size_t k = 0; k < idx.front(); ++k)
    z.emplace_back(0.0, 0.0);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e)
  {
    auto a = hull[e], b = hull[e + 1];
    const std::size_t count = idx[b] - idx[a];
    const double radius = std::exp((logs[a] - logs[b]) / static_cast<double>(count));
    for (std::size_t t = 0; t < count; ++t)
    {
      double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(count) +
                     0.7 + 1.3 * static_cast<double>(e);
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

std::vector<cplx> polynomial_roots(std::span<const double> coeffs)
{
  if (coeffs.size() < 2 || coeffs.back() == 0.0)
    throw Error(ErrorCode::InvalidArgument, "polynomial must have degree >= 1 and nonzero leading term");
  const std::size_t n = coeffs.size() - 1;
  std::vector<cplx> z = initial_guesses(coeffs);
  std::vector<bool> done(n, false);

  constexpr double eps = 2.0 * std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 2000; ++iter)
  {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i)
    {
      if (done[i])
        continue;
      if (z[i] == cplx(0.0) && coeffs[0] == 0.0)
      {
        done[i] = true;
        continue;
      }
      cplx ratio = newton_ratio(coeffs, z[i]);
      cplx s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i)
          s += 1.0 / (z[i] - z[j]);
      cplx step = ratio / (1.0 - ratio * s);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
        step = ratio;
      z[i] -= step;
      if (std::abs(step) <= eps * std::abs(z[i]) || relative_residual(coeffs, z[i]) <= eps)
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done)
      break;
  }

  // Non-real roots of a real polynomial come in conjugate pairs. A root with
  // no partner nearer to its conjugate than itself is real, displaced by
  // rounding.
  for (std::size_t i = 0; i < n; ++i)
  {
    if (z[i].imag() == 0.0)
      continue;
    const cplx mirror = std::conj(z[i]);
    double partner = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i)
        partner = std::min(partner, std::abs(z[j] - mirror));
    if (partner >= 2.0 * std::abs(z[i].imag()))
      z[i] = z[i].real();
  }

  for (auto &root : z)
  {
    for (int k = 0; k < 3; ++k)
    {
      if (root == cplx(0.0))
        break;
      cplx candidate = root - newton_ratio(coeffs, root);
      if (relative_residual(coeffs, candidate) < relative_residual(coeffs, root))
        root = candidate;
      else
        break;
    }
  }
  return z;
}

}  // namespace selfsim
