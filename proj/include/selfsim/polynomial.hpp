// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace selfsim
{

/// Coefficients are in ascending order: c[0] + c[1] z + ... + c[N] z^N.
std::complex<double> polynomial_value(std::span<const double> coeffs, std::complex<double> z);

/// |p(z)| / sum_k |c_k| |z|^k, the componentwise backward error of z as a root.
double relative_residual(std::span<const double> coeffs, std::complex<double> z);

/// All N roots of a degree-N polynomial with c[N] != 0, found by simultaneous
/// Aberth-Ehrlich iteration started on the Newton-polygon circles and then
/// polished with Newton steps.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

}  // namespace selfsim
