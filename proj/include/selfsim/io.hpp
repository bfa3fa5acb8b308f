// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "selfsim/params.hpp"
#include "selfsim/singular.hpp"
#include "selfsim/spectral.hpp"
#include "selfsim/squaring.hpp"
#include "selfsim/step_function.hpp"

namespace selfsim
{

/// Parses {"n", "a", "d", "beta", "orient"}. "n" and "orient" are optional.
/// Numbers may be JSON integers (exact), JSON floats (double) or strings such
/// as "3/8" or "0.125" (exact). Malformed text throws ParseError with the line
/// and column; wrong shapes throw SchemaError.
RawParams parse_params(std::string_view json_text);
RawParams load_params(const std::filesystem::path &path);

/// Inverse of parse_params: exact integers as JSON integers, other exact values
/// as strings, doubles as JSON numbers.
std::string params_to_json(const SimilarityParams &params);

std::string step_function_csv(const StepFunction &f);
std::string string_csv(const StieltjesString &s);
std::string spectrum_csv(const SpectrumResult &s);

std::string validation_report_json(const SimilarityParams &params);
std::string singular_report_json(const SingularPointReport &report);
std::string monotone_report_json(const MonotonicityVerdict &nondecreasing,
                                 const MonotonicityVerdict &nonincreasing);
std::string order_json(const SpectralOrderResult &result);
std::string growth_json(const GrowthFit &fit, std::size_t skip, unsigned m);

}  // namespace selfsim
