// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "selfsim/params.hpp"
#include "selfsim/step_function.hpp"

namespace selfsim
{

struct SpectralOrderResult
{
  /// Empty for class D0, where the order is undefined.
  std::optional<double> order;
  ClassLabel cls;
};

/// Root D of sum_k (a_k |d_k|)^D = 1 by bisection on (0,1) for class D2,
/// 0 for D1, undefined for D0. Throws NoRoot when no root lies in (0,1).
SpectralOrderResult spectral_order(const SimilarityParams &params, double tol);

/// Point masses at interior positions of [0,1]; masses may be negative.
class StieltjesString
{
public:
  /// Throws InvalidArgument unless positions are strictly increasing inside
  /// (0,1) and every mass is nonzero; EmptyString when there are no masses.
  static StieltjesString create(std::vector<Number> positions, std::vector<Number> masses);

  std::span<const Number> positions() const noexcept { return positions_; }
  std::span<const Number> masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }
  bool definite() const noexcept { return definite_; }

  std::vector<double> positions_double() const;
  std::vector<double> masses_double() const;

private:
  std::vector<Number> positions_;
  std::vector<Number> masses_;
  bool definite_ = true;
};

/// One mass per interior jump of f (right value minus left value).
StieltjesString masses_from_step_function(const StepFunction &f);

/// String of the jumps of the fixed point that f_m already resolves: the
/// interior jumps of f_m on either side of the level-m nest. Class D0 uses
/// every jump of f_1.
StieltjesString truncated_string(const SimilarityParams &params, unsigned m);

/// Smallest level m whose neglected tail (total jump size inside the closed
/// level-m nest) is below `tail_tol`. Only defined for |d_khat| < 1; otherwise
/// throws TruncationLevelRequired.
unsigned default_truncation_level(const SimilarityParams &params, double tail_tol = 1e-6);

/// Coefficients c_0..c_N (ascending) of det(I - lambda G diag(m)) from the
/// chain recursion over ordered mass subsets.
std::vector<double> char_poly(const StieltjesString &string);

enum class SpectrumMethod
{
  CharPoly,
  MatrixOracle,
};

const char *method_name(SpectrumMethod m) noexcept;

struct SpectrumResult
{
  /// Sorted by modulus (ties by real, then imaginary part).
  std::vector<std::complex<double>> eigenvalues;
  SpectrumMethod method;
  /// Relative characteristic-polynomial residual at each eigenvalue.
  std::vector<double> residuals;
};

/// Residual threshold above which charpoly roots are rejected.
inline constexpr double kIllConditionedResidual = 1e-9;

SpectrumResult spectrum_charpoly(const StieltjesString &string);

/// Independent route: eigenvalues mu of G diag(m) with the Dirichlet Green
/// matrix G_ij = min(x_i,x_j)(1 - max(x_i,x_j)); lambda = 1/mu.
SpectrumResult spectrum_oracle(const StieltjesString &string);

/// Largest relative deviation |a - b| / max(|a|,|b|) over the pairing of the
/// two multisets that minimizes the total deviation.
double max_relative_deviation(std::span<const std::complex<double>> a,
                              std::span<const std::complex<double>> b);

enum class GrowthRegime
{
  Exponential,  // log|lambda_n| against n
  Power,        // log|lambda_n| against log n
};

struct GrowthFit
{
  double slope;
  double intercept;
  double r_squared;
};

GrowthFit growth_fit(const SpectrumResult &spectrum, std::size_t skip,
                     GrowthRegime regime = GrowthRegime::Exponential);

}  // namespace selfsim
