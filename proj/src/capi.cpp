// SPDX-License-Identifier: Apache-2.0
#include "selfsim/selfsim.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "selfsim/error.hpp"
#include "selfsim/fixed_point.hpp"
#include "selfsim/io.hpp"
#include "selfsim/singular.hpp"
#include "selfsim/spectral.hpp"
#include "selfsim/squaring.hpp"

struct selfsim_params
{
  selfsim::SimilarityParams value;
};

struct selfsim_stepfn
{
  selfsim::StepFunction value;
};

struct selfsim_string
{
  selfsim::StieltjesString value;
};

struct selfsim_spectrum
{
  selfsim::SpectrumResult value;
};

namespace
{

thread_local std::string last_error;

selfsim_status fail(selfsim_status status, const char *message)
{
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
selfsim_status guarded(Body &&body)
{
  try
  {
    last_error.clear();
    body();
    return SELFSIM_OK;
  }
  catch (const selfsim::Error &e)
  {
    return fail(static_cast<selfsim_status>(e.code()), e.what());
  }
  catch (const std::bad_alloc &)
  {
    return fail(SELFSIM_INTERNAL_ERROR, "out of memory");
  }
  catch (const std::exception &e)
  {
    return fail(SELFSIM_INTERNAL_ERROR, e.what());
  }
}

char *copy_text(const std::string &s)
{
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char *what)
{
  if (!condition)
    throw selfsim::Error(selfsim::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char *selfsim_version(void) { return "1.0.0"; }

const char *selfsim_status_name(selfsim_status status)
{
  if (status == SELFSIM_OK)
    return "Ok";
  if (status == SELFSIM_INTERNAL_ERROR)
    return "InternalError";
  if (status >= SELFSIM_PARSE_ERROR && status <= SELFSIM_IO_ERROR)
    return selfsim::error_name(static_cast<selfsim::ErrorCode>(status));
  return "Unknown";
}

const char *selfsim_last_error(void) { return last_error.c_str(); }

void selfsim_free_text(char *text) { std::free(text); }

selfsim_status selfsim_params_parse(const char *json, size_t length, selfsim_params **out)
{
  return guarded([&] {
    require(json && out, "null argument");
    auto raw = selfsim::parse_params(std::string_view(json, length));
    *out = new selfsim_params{selfsim::SimilarityParams::create(std::move(raw))};
  });
}

selfsim_status selfsim_params_load(const char *path, selfsim_params **out)
{
  return guarded([&] {
    require(path && out, "null argument");
    *out = new selfsim_params{selfsim::SimilarityParams::create(selfsim::load_params(path))};
  });
}

void selfsim_params_free(selfsim_params *params) { delete params; }

size_t selfsim_params_n(const selfsim_params *params) { return params ? params->value.n() : 0; }

int selfsim_params_is_exact(const selfsim_params *params) { return params && params->value.is_exact(); }

selfsim_status selfsim_params_to_json(const selfsim_params *params, char **out)
{
  return guarded([&] {
    require(params && out, "null argument");
    *out = copy_text(selfsim::params_to_json(params->value));
  });
}

selfsim_status selfsim_validation_report_json(const selfsim_params *params, char **out)
{
  return guarded([&] {
    require(params && out, "null argument");
    *out = copy_text(selfsim::validation_report_json(params->value));
  });
}

selfsim_status selfsim_contraction_norm(const selfsim_params *params, double p, double *out)
{
  return guarded([&] {
    require(params && out, "null argument");
    *out = selfsim::contraction_norm(params->value, p).to_double();
  });
}

selfsim_status selfsim_classify(const selfsim_params *params, selfsim_class *cls, size_t *khat)
{
  return guarded([&] {
    require(params && cls, "null argument");
    const auto label = selfsim::classify_class(params->value);
    *cls = static_cast<selfsim_class>(label.kind);
    if (khat)
      *khat = label.kind == selfsim::ClassLabel::Kind::D1 ? label.khat + 1 : 0;
  });
}

selfsim_status selfsim_singular_point(const selfsim_params *params, double *xhat, char **exact)
{
  return guarded([&] {
    require(params && xhat, "null argument");
    const auto x = selfsim::singular_point(params->value);
    if (exact)
      *exact = copy_text(x.to_string());
    *xhat = x.to_double();
  });
}

selfsim_status selfsim_singular_report_json(const selfsim_params *params, char **out)
{
  return guarded([&] {
    require(params && out, "null argument");
    *out = copy_text(selfsim::singular_report_json(selfsim::classify_any_orientation(params->value)));
  });
}

selfsim_status selfsim_monotone(const selfsim_params *params, int *nondecreasing, int *nonincreasing)
{
  return guarded([&] {
    require(params, "null argument");
    if (nondecreasing)
      *nondecreasing = selfsim::is_nondecreasing(params->value).holds;
    if (nonincreasing)
      *nonincreasing = selfsim::is_nonincreasing(params->value).holds;
  });
}

selfsim_status selfsim_monotone_report_json(const selfsim_params *params, char **out)
{
  return guarded([&] {
    require(params && out, "null argument");
    *out = copy_text(selfsim::monotone_report_json(selfsim::is_nondecreasing(params->value),
                                                   selfsim::is_nonincreasing(params->value)));
  });
}

selfsim_status selfsim_spectral_order(const selfsim_params *params, double tol, int *defined, double *order)
{
  return guarded([&] {
    require(params && defined && order, "null argument");
    const auto r = selfsim::spectral_order(params->value, tol);
    *defined = r.order.has_value();
    *order = r.order.value_or(0.0);
  });
}

selfsim_status selfsim_order_json(const selfsim_params *params, double tol, char **out)
{
  return guarded([&] {
    require(params && out, "null argument");
    *out = copy_text(selfsim::order_json(selfsim::spectral_order(params->value, tol)));
  });
}

selfsim_status selfsim_iterate(const selfsim_params *params, unsigned m, double p, selfsim_stepfn **out)
{
  return guarded([&] {
    require(params && out, "null argument");
    *out = new selfsim_stepfn{selfsim::iterate_fixed_point(params->value, m, p)};
  });
}

selfsim_status selfsim_apply(const selfsim_params *params, const selfsim_stepfn *f, selfsim_stepfn **out)
{
  return guarded([&] {
    require(params && f && out, "null argument");
    *out = new selfsim_stepfn{selfsim::apply_operator(params->value, f->value)};
  });
}

void selfsim_stepfn_free(selfsim_stepfn *f) { delete f; }

size_t selfsim_stepfn_size(const selfsim_stepfn *f) { return f ? f->value.size() : 0; }

selfsim_status selfsim_stepfn_piece(const selfsim_stepfn *f, size_t index, double *left, double *right,
                                    double *value)
{
  return guarded([&] {
    require(f, "null argument");
    if (index >= f->value.size())
      throw selfsim::Error(selfsim::ErrorCode::IndexOutOfRange, "piece index out of range");
    const auto &piece = f->value.piece(index);
    if (left)
      *left = piece.left.to_double();
    if (right)
      *right = piece.right.to_double();
    if (value)
      *value = piece.value.to_double();
  });
}

selfsim_status selfsim_stepfn_evaluate(const selfsim_stepfn *f, double x, double *out)
{
  return guarded([&] {
    require(f && out, "null argument");
    *out = f->value.evaluate(selfsim::Number(x)).to_double();
  });
}

selfsim_status selfsim_stepfn_csv(const selfsim_stepfn *f, char **out)
{
  return guarded([&] {
    require(f && out, "null argument");
    *out = copy_text(selfsim::step_function_csv(f->value));
  });
}

selfsim_status selfsim_stepfn_lp_distance(const selfsim_stepfn *f, const selfsim_stepfn *g, double p,
                                          double *out)
{
  return guarded([&] {
    require(f && g && out, "null argument");
    *out = selfsim::lp_distance(f->value, g->value, p).to_double();
  });
}

selfsim_status selfsim_default_truncation(const selfsim_params *params, unsigned *m)
{
  return guarded([&] {
    require(params && m, "null argument");
    *m = selfsim::default_truncation_level(params->value);
  });
}

selfsim_status selfsim_truncated_string(const selfsim_params *params, unsigned m, selfsim_string **out)
{
  return guarded([&] {
    require(params && out, "null argument");
    *out = new selfsim_string{selfsim::truncated_string(params->value, m)};
  });
}

selfsim_status selfsim_string_create(const double *positions, const double *masses, size_t count,
                                     selfsim_string **out)
{
  return guarded([&] {
    require(out && (count == 0 || (positions && masses)), "null argument");
    std::vector<selfsim::Number> x, m;
    for (size_t i = 0; i < count; ++i)
    {
      x.emplace_back(positions[i]);
      m.emplace_back(masses[i]);
    }
    *out = new selfsim_string{selfsim::StieltjesString::create(std::move(x), std::move(m))};
  });
}

void selfsim_string_free(selfsim_string *s) { delete s; }

size_t selfsim_string_size(const selfsim_string *s) { return s ? s->value.size() : 0; }

int selfsim_string_definite(const selfsim_string *s) { return s && s->value.definite(); }

selfsim_status selfsim_string_mass(const selfsim_string *s, size_t index, double *position, double *mass)
{
  return guarded([&] {
    require(s, "null argument");
    if (index >= s->value.size())
      throw selfsim::Error(selfsim::ErrorCode::IndexOutOfRange, "mass index out of range");
    if (position)
      *position = s->value.positions()[index].to_double();
    if (mass)
      *mass = s->value.masses()[index].to_double();
  });
}

selfsim_status selfsim_string_csv(const selfsim_string *s, char **out)
{
  return guarded([&] {
    require(s && out, "null argument");
    *out = copy_text(selfsim::string_csv(s->value));
  });
}

selfsim_status selfsim_spectrum_compute(const selfsim_string *s, selfsim_method method, selfsim_spectrum **out)
{
  return guarded([&] {
    require(s && out, "null argument");
    switch (method)
    {
      case SELFSIM_METHOD_CHARPOLY:
        *out = new selfsim_spectrum{selfsim::spectrum_charpoly(s->value)};
        return;
      case SELFSIM_METHOD_ORACLE:
        *out = new selfsim_spectrum{selfsim::spectrum_oracle(s->value)};
        return;
    }
    throw selfsim::Error(selfsim::ErrorCode::InvalidArgument, "unknown spectrum method");
  });
}

void selfsim_spectrum_free(selfsim_spectrum *spec) { delete spec; }

size_t selfsim_spectrum_size(const selfsim_spectrum *spec) { return spec ? spec->value.eigenvalues.size() : 0; }

selfsim_status selfsim_spectrum_eigenvalue(const selfsim_spectrum *spec, size_t index, double *re, double *im,
                                           double *residual)
{
  return guarded([&] {
    require(spec, "null argument");
    if (index >= spec->value.eigenvalues.size())
      throw selfsim::Error(selfsim::ErrorCode::IndexOutOfRange, "eigenvalue index out of range");
    if (re)
      *re = spec->value.eigenvalues[index].real();
    if (im)
      *im = spec->value.eigenvalues[index].imag();
    if (residual)
      *residual = spec->value.residuals[index];
  });
}

selfsim_status selfsim_spectrum_csv(const selfsim_spectrum *spec, char **out)
{
  return guarded([&] {
    require(spec && out, "null argument");
    *out = copy_text(selfsim::spectrum_csv(spec->value));
  });
}

selfsim_status selfsim_spectrum_deviation(const selfsim_spectrum *a, const selfsim_spectrum *b, double *out)
{
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = selfsim::max_relative_deviation(a->value.eigenvalues, b->value.eigenvalues);
  });
}

selfsim_status selfsim_growth_fit(const selfsim_spectrum *spec, size_t skip, selfsim_regime regime, double *slope,
                                  double *intercept, double *r_squared)
{
  return guarded([&] {
    require(spec, "null argument");
    const auto fit = selfsim::growth_fit(spec->value, skip,
                                         regime == SELFSIM_REGIME_POWER ? selfsim::GrowthRegime::Power
                                                                        : selfsim::GrowthRegime::Exponential);
    if (slope)
      *slope = fit.slope;
    if (intercept)
      *intercept = fit.intercept;
    if (r_squared)
      *r_squared = fit.r_squared;
  });
}

selfsim_status selfsim_growth_json(const selfsim_spectrum *spec, size_t skip, unsigned m, char **out)
{
  return guarded([&] {
    require(spec && out, "null argument");
    *out = copy_text(selfsim::growth_json(selfsim::growth_fit(spec->value, skip), skip, m));
  });
}

selfsim_status selfsim_square(const selfsim_params *params, selfsim_params **out, char **diagnostics)
{
  return guarded([&] {
    require(params && out, "null argument");
    auto sq = selfsim::square_params(params->value);
    std::string notes;
    for (const auto &line : sq.diagnostics)
      notes += line + "\n";
    char *text = diagnostics ? copy_text(notes) : nullptr;
    *out = new selfsim_params{std::move(sq.canonical)};
    if (diagnostics)
      *diagnostics = text;
  });
}

selfsim_status selfsim_verify_square(const selfsim_params *params, unsigned m, double p, double tol, int *agrees,
                                     double *distance)
{
  return guarded([&] {
    require(params, "null argument");
    const auto check = selfsim::verify_square(params->value, m, p, selfsim::Number(tol));
    if (agrees)
      *agrees = check.agrees;
    if (distance)
      *distance = check.distance.to_double();
  });
}

}  // extern "C"
