// SPDX-License-Identifier: Apache-2.0
#include "selfsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "selfsim/error.hpp"
#include "selfsim/fixed_point.hpp"
#include "selfsim/polynomial.hpp"

namespace selfsim
{

using cplx = std::complex<double>;

const char *method_name(SpectrumMethod m) noexcept
{
  return m == SpectrumMethod::CharPoly ? "charpoly" : "oracle";
}

SpectralOrderResult spectral_order(const SimilarityParams &params, double tol)
{
  if (!(tol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const ClassLabel cls = classify_class(params);
  if (cls.kind == ClassLabel::Kind::D0)
    return {std::nullopt, cls};
  if (cls.kind == ClassLabel::Kind::D1)
    return {0.0, cls};

  std::vector<double> ratios;
  for (std::size_t k = 0; k < params.n(); ++k)
  {
    if (params.d()[k].is_zero())
      continue;
    double r = params.a()[k].to_double() * std::fabs(params.d()[k].to_double());
    if (r >= 1.0)
      throw Error(ErrorCode::NoRoot, "a_k |d_k| >= 1 at k = " + std::to_string(k + 1));
    ratios.push_back(r);
  }
  auto excess = [&](double D) {
    double s = -1.0;
    for (double r : ratios)
      s += std::pow(r, D);
    return s;
  };
  if (!(excess(1.0) < 0.0))
    throw Error(ErrorCode::NoRoot, "sum a_k |d_k| >= 1, the root is not below 1");

  double lo = 0.0, hi = 1.0;
  while (hi - lo >= tol)
  {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), cls};
}

StieltjesString StieltjesString::create(std::vector<Number> positions, std::vector<Number> masses)
{
  if (positions.size() != masses.size())
    throw Error(ErrorCode::InvalidArgument, "positions and masses differ in length");
  if (masses.empty())
    throw Error(ErrorCode::EmptyString, "string carries no masses");
  StieltjesString s;
  for (std::size_t i = 0; i < positions.size(); ++i)
  {
    if (!(positions[i] > Number(0)) || !(positions[i] < Number(1)))
      throw Error(ErrorCode::InvalidArgument, "mass position outside (0,1)");
    if (i > 0 && !(positions[i - 1] < positions[i]))
      throw Error(ErrorCode::InvalidArgument, "mass positions must increase strictly");
    if (masses[i].is_zero())
      throw Error(ErrorCode::InvalidArgument, "zero mass");
    s.definite_ = s.definite_ && masses[i].sign() > 0;
  }
  s.positions_ = std::move(positions);
  s.masses_ = std::move(masses);
  return s;
}

std::vector<double> StieltjesString::positions_double() const
{
  std::vector<double> out;
  for (const auto &x : positions_)
    out.push_back(x.to_double());
  return out;
}

std::vector<double> StieltjesString::masses_double() const
{
  std::vector<double> out;
  for (const auto &m : masses_)
    out.push_back(m.to_double());
  return out;
}

namespace
{

void collect_jumps(std::span<const Piece> run, std::vector<Number> &pos, std::vector<Number> &mass)
{
  for (std::size_t j = 1; j < run.size(); ++j)
  {
    Number jump = run[j].value - run[j - 1].value;
    if (jump.is_zero())
      continue;
    pos.push_back(run[j].left);
    mass.push_back(std::move(jump));
  }
}

}  // namespace

StieltjesString masses_from_step_function(const StepFunction &f)
{
  std::vector<Number> pos, mass;
  auto pieces = f.pieces();
  collect_jumps(pieces, pos, mass);
  return StieltjesString::create(std::move(pos), std::move(mass));
}

StieltjesString truncated_string(const SimilarityParams &params, unsigned m)
{
  if (m == 0)
    throw Error(ErrorCode::InvalidArgument, "truncation level must be >= 1");
  auto fm = iterate_fixed_point(params, m);
  auto region = settled_region(params, fm, m);
  std::vector<Number> pos, mass;
  collect_jumps(region.left, pos, mass);
  collect_jumps(region.right, pos, mass);
  return StieltjesString::create(std::move(pos), std::move(mass));
}

unsigned default_truncation_level(const SimilarityParams &params, double tail_tol)
{
  const ClassLabel cls = classify_class(params);
  if (cls.kind == ClassLabel::Kind::D0)
    return 1;
  if (cls.kind != ClassLabel::Kind::D1)
    throw Error(ErrorCode::NotClassD1, "truncated strings need class D0 or D1");
  if (is_trivial_constant(params))
    return 1;

  const std::size_t k = cls.khat, n = params.n();
  const double dh = params.d()[k].to_double();
  if (std::fabs(dh) >= 1.0)
    throw Error(ErrorCode::TruncationLevelRequired,
                "|d_khat| >= 1: the fixed point is unbounded near the singular point");
  std::vector<double> beta;
  for (const auto &b : params.beta())
    beta.push_back(b.to_double());
  const double bh = beta[k];
  const double limit = bh / (1.0 - dh);
  const bool rev = params.reversed(k);

  // One-sided values of the fixed point at 0+ and 1-.
  double at0, at1;
  if (k != 0 && k != n - 1)
  {
    at0 = beta[0];
    at1 = beta[n - 1];
  }
  else if (k == 0)
  {
    at1 = beta[n - 1];
    at0 = rev ? bh + dh * at1 : limit;
  }
  else
  {
    at0 = beta[0];
    at1 = rev ? bh + dh * at0 : limit;
  }
  const double seg_left = bh + dh * (rev ? at1 : at0);
  const double seg_right = bh + dh * (rev ? at0 : at1);
  auto left_end = [&](std::size_t j) { return j == k ? seg_left : beta[j]; };
  auto right_end = [&](std::size_t j) { return j == k ? seg_right : beta[j]; };

  double boundary_jumps = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j)
    boundary_jumps += std::fabs(left_end(j + 1) - right_end(j));
  const double variation = boundary_jumps / (1.0 - std::fabs(dh));

  constexpr unsigned kMaxLevel = 400;
  double tail = variation;
  for (unsigned m = 1; m <= kMaxLevel; ++m)
  {
    if (tail < tail_tol)
      return m;
    tail *= std::fabs(dh);
  }
  throw Error(ErrorCode::TruncationLevelRequired,
              "tail bound needs a level above " + std::to_string(kMaxLevel));
}

std::vector<double> char_poly(const StieltjesString &string)
{
  const std::size_t n = string.size();
  if (n == 0)
    throw Error(ErrorCode::EmptyString, "string carries no masses");
  const auto x = string.positions_double();
  const auto m = string.masses_double();

  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[0] = 1.0;
  // chain[j]: signed sum over ordered subsets of size k ending at mass j of
  // prod m * x_{i1} (x_{i2}-x_{i1}) ... (x_j - x_{i_{k-1}}).
  std::vector<double> chain(n), next(n);
  for (std::size_t j = 0; j < n; ++j)
    chain[j] = m[j] * x[j];
  for (std::size_t k = 1; k <= n; ++k)
  {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      sum += chain[j] * (1.0 - x[j]);
    coeffs[k] = (k % 2 == 0) ? sum : -sum;
    if (k == n)
      break;
    for (std::size_t j = 0; j < n; ++j)
    {
      double acc = 0.0;
      for (std::size_t i = 0; i < j; ++i)
        acc += chain[i] * (x[j] - x[i]);
      next[j] = m[j] * acc;
    }
    std::swap(chain, next);
  }
  return coeffs;
}

namespace
{

void sort_by_modulus(SpectrumResult &r)
{
  std::vector<std::size_t> order(r.eigenvalues.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const cplx &x = r.eigenvalues[a], &y = r.eigenvalues[b];
    if (std::abs(x) != std::abs(y))
      return std::abs(x) < std::abs(y);
    if (x.real() != y.real())
      return x.real() < y.real();
    return x.imag() < y.imag();
  });
  SpectrumResult sorted{{}, r.method, {}};
  for (auto i : order)
  {
    sorted.eigenvalues.push_back(r.eigenvalues[i]);
    sorted.residuals.push_back(r.residuals[i]);
  }
  r = std::move(sorted);
}

// Imaginary parts at rounding level are dropped so real spectra print as real.
cplx clean(cplx z)
{
  if (std::fabs(z.imag()) <= 1e-12 * std::abs(z))
    return {z.real(), 0.0};
  return z;
}

}  // namespace

SpectrumResult spectrum_charpoly(const StieltjesString &string)
{
  const auto coeffs = char_poly(string);
  SpectrumResult r{{}, SpectrumMethod::CharPoly, {}};
  for (auto z : polynomial_roots(coeffs))
  {
    z = clean(z);
    const double res = relative_residual(coeffs, z);
    if (!(res <= kIllConditionedResidual))
    {
      std::ostringstream msg;
      msg << "root " << z << " keeps relative residual " << res;
      throw Error(ErrorCode::IllConditioned, msg.str());
    }
    r.eigenvalues.push_back(z);
    r.residuals.push_back(res);
  }
  sort_by_modulus(r);
  return r;
}

SpectrumResult spectrum_oracle(const StieltjesString &string)
{
  const std::size_t n = string.size();
  if (n == 0)
    throw Error(ErrorCode::EmptyString, "string carries no masses");
  const auto x = string.positions_double();
  const auto m = string.masses_double();

  Eigen::MatrixXd kernel(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
    {
      const double lo = std::min(x[i], x[j]), hi = std::max(x[i], x[j]);
      kernel(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = lo * (1.0 - hi) * m[j];
    }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(kernel, false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::IllConditioned, "eigenvalue iteration did not converge");

  const auto mu = solver.eigenvalues();
  double largest = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    largest = std::max(largest, std::abs(mu[i]));
  const auto coeffs = char_poly(string);
  SpectrumResult r{{}, SpectrumMethod::MatrixOracle, {}};
  for (Eigen::Index i = 0; i < mu.size(); ++i)
  {
    if (std::abs(mu[i]) <= 1e3 * std::numeric_limits<double>::epsilon() * largest)
      throw Error(ErrorCode::RankDeficient, "G diag(m) has a numerically zero eigenvalue");
    cplx lambda = clean(1.0 / mu[i]);
    r.eigenvalues.push_back(lambda);
    r.residuals.push_back(relative_residual(coeffs, lambda));
  }
  sort_by_modulus(r);
  return r;
}

namespace
{

// Minimum-cost perfect matching on a square cost matrix (Hungarian method,
// potentials form). Returns assignment[row] = column.
std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<double>> &cost)
{
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i)
  {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do
    {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j)
      {
        if (used[j])
          continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j])
        {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta)
        {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j)
      {
        if (used[j])
        {
          u[p[j]] += delta;
          v[j] -= delta;
        }
        else
          minv[j] -= delta;
      }
      j0 = j1;
    } while (p[j0] != 0);
    do
    {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j)
    assignment[p[j] - 1] = j - 1;
  return assignment;
}

}  // namespace

double max_relative_deviation(std::span<const cplx> a, std::span<const cplx> b)
{
  if (a.size() != b.size())
    throw Error(ErrorCode::InvalidArgument, "spectra differ in size");
  const std::size_t n = a.size();
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
    {
      const double scale = std::max({std::abs(a[i]), std::abs(b[j]), std::numeric_limits<double>::min()});
      cost[i][j] = std::abs(a[i] - b[j]) / scale;
    }
  double worst = 0.0;
  const auto assignment = min_cost_assignment(cost);
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, cost[i][assignment[i]]);
  return worst;
}

GrowthFit growth_fit(const SpectrumResult &spectrum, std::size_t skip, GrowthRegime regime)
{
  const std::size_t total = spectrum.eigenvalues.size();
  if (total < skip + 4)
    throw Error(ErrorCode::TooFewEigenvalues, "need at least " + std::to_string(skip + 4) +
                                                  " eigenvalues, have " + std::to_string(total));
  std::vector<double> xs, ys;
  for (std::size_t i = skip; i < total; ++i)
  {
    const double index = static_cast<double>(i + 1);
    xs.push_back(regime == GrowthRegime::Exponential ? index : std::log(index));
    ys.push_back(std::log(std::abs(spectrum.eigenvalues[i])));
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  GrowthFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace selfsim
