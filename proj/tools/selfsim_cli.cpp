// SPDX-License-Identifier: Apache-2.0
// Command-line front end over the selfsim C API.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "selfsim/selfsim.h"

namespace
{

struct Failure
{
  selfsim_status status;
  std::string message;
};

// Library messages already start with the status name; local ones get it here.
Failure local_failure(selfsim_status status, const std::string &message)
{
  return Failure{status, std::string(selfsim_status_name(status)) + ": " + message};
}

void check(selfsim_status status)
{
  if (status != SELFSIM_OK)
    throw Failure{status, selfsim_last_error()};
}

struct ParamsDeleter
{
  void operator()(selfsim_params *p) const { selfsim_params_free(p); }
};
struct StepDeleter
{
  void operator()(selfsim_stepfn *p) const { selfsim_stepfn_free(p); }
};
struct StringDeleter
{
  void operator()(selfsim_string *p) const { selfsim_string_free(p); }
};
struct SpectrumDeleter
{
  void operator()(selfsim_spectrum *p) const { selfsim_spectrum_free(p); }
};
using ParamsPtr = std::unique_ptr<selfsim_params, ParamsDeleter>;
using StepPtr = std::unique_ptr<selfsim_stepfn, StepDeleter>;
using StringPtr = std::unique_ptr<selfsim_string, StringDeleter>;
using SpectrumPtr = std::unique_ptr<selfsim_spectrum, SpectrumDeleter>;

// Takes ownership of a library-allocated string.
std::string take(char *text)
{
  std::string out = text ? text : "";
  selfsim_free_text(text);
  return out;
}

struct Config
{
  std::string params_path;
  std::optional<unsigned> m;
  double p = 1.0;
  double tol = 1e-12;
  std::string format;
  std::string out_path;
  std::string method = "charpoly";
  std::size_t skip = 0;
};

ParamsPtr load(const Config &cfg)
{
  selfsim_params *raw = nullptr;
  check(selfsim_params_load(cfg.params_path.c_str(), &raw));
  return ParamsPtr(raw);
}

void require_format(const Config &cfg, const char *command, const char *supported)
{
  if (!cfg.format.empty() && cfg.format != supported)
    throw local_failure(SELFSIM_INVALID_ARGUMENT,
                        std::string(command) + " writes " + supported + " only, not " + cfg.format);
}

unsigned level(const Config &cfg, const selfsim_params *params)
{
  if (cfg.m)
    return *cfg.m;
  unsigned m = 0;
  check(selfsim_default_truncation(params, &m));
  return m;
}

StringPtr truncated(const selfsim_params *params, unsigned m)
{
  selfsim_string *s = nullptr;
  check(selfsim_truncated_string(params, m, &s));
  return StringPtr(s);
}

SpectrumPtr compute(const selfsim_string *s, selfsim_method method)
{
  selfsim_spectrum *spec = nullptr;
  check(selfsim_spectrum_compute(s, method, &spec));
  return SpectrumPtr(spec);
}

std::string run_validate(const Config &cfg)
{
  require_format(cfg, "validate", "json");
  auto params = load(cfg);
  char *text = nullptr;
  check(selfsim_validation_report_json(params.get(), &text));
  return take(text);
}

std::string run_iterate(const Config &cfg)
{
  require_format(cfg, "iterate", "csv");
  if (!cfg.m)
    throw local_failure(SELFSIM_INVALID_ARGUMENT, "iterate needs --m");
  auto params = load(cfg);
  selfsim_stepfn *f = nullptr;
  check(selfsim_iterate(params.get(), *cfg.m, cfg.p, &f));
  StepPtr owned(f);
  char *text = nullptr;
  check(selfsim_stepfn_csv(f, &text));
  return take(text);
}

std::string run_singular(const Config &cfg)
{
  require_format(cfg, "singular", "json");
  auto params = load(cfg);
  char *text = nullptr;
  check(selfsim_singular_report_json(params.get(), &text));
  return take(text);
}

std::string run_monotone(const Config &cfg)
{
  require_format(cfg, "monotone", "json");
  auto params = load(cfg);
  char *text = nullptr;
  check(selfsim_monotone_report_json(params.get(), &text));
  return take(text);
}

std::string run_order(const Config &cfg)
{
  require_format(cfg, "order", "json");
  auto params = load(cfg);
  char *text = nullptr;
  check(selfsim_order_json(params.get(), cfg.tol, &text));
  return take(text);
}

std::string run_string(const Config &cfg)
{
  require_format(cfg, "string", "csv");
  auto params = load(cfg);
  auto s = truncated(params.get(), level(cfg, params.get()));
  char *text = nullptr;
  check(selfsim_string_csv(s.get(), &text));
  return take(text);
}

std::string spectrum_block(const selfsim_spectrum *spec)
{
  char *text = nullptr;
  check(selfsim_spectrum_csv(spec, &text));
  return take(text);
}

std::string run_spectrum(const Config &cfg)
{
  require_format(cfg, "spectrum", "csv");
  auto params = load(cfg);
  auto s = truncated(params.get(), level(cfg, params.get()));
  if (cfg.method == "charpoly")
    return spectrum_block(compute(s.get(), SELFSIM_METHOD_CHARPOLY).get());
  if (cfg.method == "oracle")
    return spectrum_block(compute(s.get(), SELFSIM_METHOD_ORACLE).get());

  // Both routes run concurrently; the output order is fixed.
  auto charpoly = std::async(std::launch::async, compute, s.get(), SELFSIM_METHOD_CHARPOLY);
  auto oracle = std::async(std::launch::async, compute, s.get(), SELFSIM_METHOD_ORACLE);
  auto a = charpoly.get();
  auto b = oracle.get();
  double deviation = 0.0;
  check(selfsim_spectrum_deviation(a.get(), b.get(), &deviation));
  std::ostringstream out;
  out << "# method,charpoly\n" << spectrum_block(a.get());
  out << "# method,oracle\n" << spectrum_block(b.get());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", deviation);
  out << "# max_relative_deviation," << buf << "\n";
  return out.str();
}

std::string run_square(const Config &cfg)
{
  require_format(cfg, "square", "json");
  auto params = load(cfg);
  selfsim_params *sq = nullptr;
  char *notes = nullptr;
  check(selfsim_square(params.get(), &sq, &notes));
  ParamsPtr owned(sq);
  std::istringstream lines(take(notes));
  for (std::string line; std::getline(lines, line);)
    std::cerr << "note: " << line << "\n";
  char *text = nullptr;
  check(selfsim_params_to_json(sq, &text));
  return take(text);
}

std::string run_growth(const Config &cfg)
{
  require_format(cfg, "growth", "json");
  auto params = load(cfg);
  const unsigned m = level(cfg, params.get());
  auto s = truncated(params.get(), m);
  auto spec = compute(s.get(), SELFSIM_METHOD_CHARPOLY);
  char *text = nullptr;
  check(selfsim_growth_json(spec.get(), cfg.skip, m, &text));
  return take(text);
}

int exit_code(selfsim_status status)
{
  switch (status)
  {
    case SELFSIM_NO_ROOT:
    case SELFSIM_ILL_CONDITIONED:
    case SELFSIM_RANK_DEFICIENT:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Self-similar step functions, singular points and string spectra"};
  app.require_subcommand(1);
  Config cfg;

  struct Command
  {
    const char *name;
    const char *help;
    std::string (*run)(const Config &);
  };
  const Command commands[] = {
      {"validate", "Validate a parameter file and report its class", run_validate},
      {"iterate", "Write the approximant f_m = G^m(0) as CSV", run_iterate},
      {"singular", "Report the singular point and its type", run_singular},
      {"monotone", "Check the monotonicity criteria", run_monotone},
      {"order", "Compute the spectral order", run_order},
      {"string", "Write the truncated Stieltjes string as CSV", run_string},
      {"spectrum", "Eigenvalues of the truncated string", run_spectrum},
      {"square", "Parameters of G o G for a reversed khat map", run_square},
      {"growth", "Fit log|lambda_n| against n", run_growth},
  };

  std::string (*selected)(const Config &) = nullptr;
  for (const auto &cmd : commands)
  {
    auto *sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--params", cfg.params_path, "Parameter JSON file")->required();
    sub->add_option("--m", cfg.m, "Iteration or truncation level")->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p, "Norm index for the contraction check")->check(CLI::Range(1.0, HUGE_VAL));
    sub->add_option("--tol", cfg.tol, "Tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "Output file (default: standard output)");
    sub->add_option("--method", cfg.method, "Spectrum method")->check(CLI::IsMember({"charpoly", "oracle", "both"}));
    sub->add_option("--skip", cfg.skip, "Leading eigenvalues left out of the fit");
    sub->final_callback([&selected, run = cmd.run] { selected = run; });
  }

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try
  {
    const std::string output = selected(cfg);
    if (cfg.out_path.empty())
      std::cout << output;
    else
    {
      std::ofstream out(cfg.out_path, std::ios::binary);
      if (!(out << output))
        throw local_failure(SELFSIM_IO_ERROR, "cannot write " + cfg.out_path);
    }
  }
  catch (const Failure &f)
  {
    std::cerr << "error: " << f.message << "\n";
    return exit_code(f.status);
  }
  return 0;
}
