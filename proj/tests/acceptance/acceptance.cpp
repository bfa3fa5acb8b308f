// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/fixed_point.hpp"
#include "selfsim/io.hpp"
#include "selfsim/singular.hpp"
#include "selfsim/spectral.hpp"
#include "selfsim/squaring.hpp"
#include "support/generators.hpp"

using namespace selfsim;
using testsupport::frac;

namespace
{

struct Outcome
{
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SimilarityParams make(std::vector<Number> a, std::vector<Number> d, std::vector<Number> beta)
{
  return SimilarityParams::create(RawParams{std::move(a), std::move(d), std::move(beta), {}});
}

std::vector<Number> thirds() { return {frac(1, 3), frac(1, 3), frac(1, 3)}; }

std::vector<SimilarityParams> figures()
{
  return {
      make({frac(1, 2), frac(1, 2)}, {0, frac(1, 2)}, {0, frac(1, 2)}),
      make({frac(1, 2), frac(1, 4), frac(1, 4)}, {0, 0, 1}, {1, 0, 0}),
      make(thirds(), {0, 2, 0}, {1, 1, 0}),
      make(thirds(), {0, 2, 0}, {1, 1, -2}),
  };
}

std::vector<SimilarityParams> float_figures()
{
  const double t = 1.0 / 3.0;
  return {
      make({0.5, 0.5}, {0.0, 0.5}, {0.0, 0.5}),
      make({0.5, 0.25, 0.25}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}),
      make({t, t, t}, {0.0, 2.0, 0.0}, {1.0, 1.0, 0.0}),
      make({t, t, t}, {0.0, 2.0, 0.0}, {1.0, 1.0, -2.0}),
  };
}

Outcome singular_point_table()
{
  const std::vector<Number> expected{Number(1), Number(1), frac(1, 2), frac(1, 2)};
  const auto exact = figures();
  const auto floats = float_figures();
  std::ostringstream detail;
  bool ok = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
  {
    const Number x = singular_point(exact[i]);
    ok = ok && x.is_exact() && x == expected[i];
    detail << x << ' ';
    worst = std::max(worst, std::abs(singular_point(floats[i]).to_double() - expected[i].to_double()));
  }
  ok = ok && worst <= 1e-14;
  detail << "(float mode max error " << worst << ")";
  return {ok, detail.str()};
}

Outcome classification_table()
{
  const auto figs = figures();
  const auto r1 = classify_singularity(figs[0]);
  const auto r2 = classify_singularity(figs[1]);
  const auto r3 = classify_singularity(figs[2]);
  const auto r4 = classify_singularity(figs[3]);
  const bool ok1 = r1.case_label == SingularCase::C1 && std::holds_alternative<FiniteLimit>(r1.kind) &&
                   std::get<FiniteLimit>(r1.kind).value == Number(1);
  const bool ok2 = r2.case_label == SingularCase::C2b && std::holds_alternative<Discontinuity2ndKind>(r2.kind);
  const bool ok3 = r3.case_label == SingularCase::C3a && std::holds_alternative<InfiniteLimit>(r3.kind) &&
                   std::get<InfiniteLimit>(r3.kind).sign > 0;
  const bool ok4 = r4.case_label == SingularCase::C3b && std::holds_alternative<Discontinuity2ndKind>(r4.kind);
  std::ostringstream detail;
  for (const auto *r : {&r1, &r2, &r3, &r4})
    detail << case_name(r->case_label) << '/' << behavior_name(r->kind) << ' ';
  return {ok1 && ok2 && ok3 && ok4, detail.str()};
}

Outcome figure_reproduction()
{
  const auto start = Clock::now();
  const auto figs = figures();
  const auto f6 = iterate_fixed_point(figs[0], 6);
  const auto settled = settled_region(figs[0], f6, 6).left;
  bool ok = settled.size() == 6;
  for (std::size_t j = 0; ok && j < 6; ++j)
  {
    const Number plateau = Number(1) - pow(frac(1, 2), static_cast<unsigned>(j));
    ok = settled[j].value == plateau && settled[j].value.is_exact();
    if (j >= 1)
      ok = ok && settled[j].left == Number(1) - pow(frac(1, 2), static_cast<unsigned>(j));
  }
  // The CSV the command writes carries the same exact values.
  const std::string csv = step_function_csv(f6);
  ok = ok && csv.find("0.5,0.75,0.5\n") != std::string::npos && csv.find("0.9375,0.96875,0.9375\n") != std::string::npos;

  const auto f2 = iterate_fixed_point(figs[1], 6);
  bool alternates = f2.size() >= 6;
  for (std::size_t j = 0; alternates && j < f2.size(); ++j)
    alternates = f2.values()[j] == Number(j % 2 == 0 ? 1 : 0) &&
                 f2.breakpoints()[j + 1] == (j + 1 == f2.size() ? Number(1) : Number(1) - pow(frac(1, 2), static_cast<unsigned>(j + 1)));
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "fig1 plateaus";
  for (const auto &p : settled)
    detail << ' ' << p.value;
  detail << "; fig2 alternates " << (alternates ? "yes" : "no") << "; " << elapsed << " s";
  return {ok && alternates && elapsed < 1.0, detail.str()};
}

Outcome contraction_suite()
{
  std::mt19937_64 rng(2024);
  int violations = 0, checked = 0;
  for (int trial = 0; trial < 200; ++trial)
  {
    // At most two nonzero d keeps D2 approximants small enough for exact arithmetic.
    const auto p = testsupport::random_contraction(rng, frac(19, 20), 4, 2);
    const Number r = contraction_norm(p, 1.0);
    auto prev = iterate_fixed_point(p, 1);
    auto cur = apply_operator(p, prev);
    Number last = lp_distance(cur, prev, 1.0);
    for (unsigned m = 2; m <= 8; ++m)
    {
      auto next = apply_operator(p, cur);
      const Number step = lp_distance(next, cur, 1.0);
      violations += !(step <= r * last);
      ++checked;
      last = step;
      cur = std::move(next);
    }
  }
  return {violations == 0, std::to_string(checked) + " steps, " + std::to_string(violations) + " violations"};
}

Outcome oracle_equivalence()
{
  const auto start = Clock::now();
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> count(1, 10);
  std::uniform_real_distribution<double> mag(0.1, 2.0);
  std::bernoulli_distribution neg(0.5);
  double worst = 0.0;
  int failures = 0;
  for (int trial = 0; trial < 300; ++trial)
  {
    const int n = count(rng);
    std::vector<int> grid(99);
    for (int i = 0; i < 99; ++i)
      grid[i] = i + 1;
    std::shuffle(grid.begin(), grid.end(), rng);
    grid.resize(n);
    std::sort(grid.begin(), grid.end());
    std::vector<Number> x, m;
    for (int g : grid)
    {
      x.push_back(frac(g, 100));
      m.push_back(Number((neg(rng) ? -1.0 : 1.0) * mag(rng)));
    }
    const auto s = StieltjesString::create(std::move(x), std::move(m));
    try
    {
      const double dev = max_relative_deviation(spectrum_charpoly(s).eigenvalues, spectrum_oracle(s).eigenvalues);
      worst = std::max(worst, dev);
    }
    catch (const Error &)
    {
      ++failures;
    }
  }
  const auto two = StieltjesString::create({frac(1, 3), frac(2, 3)}, {Number(1), Number(1)});
  double analytic = 0.0;
  for (const auto &spec : {spectrum_charpoly(two), spectrum_oracle(two)})
  {
    analytic = std::max(analytic, std::abs(spec.eigenvalues[0] - 3.0) / 3.0);
    analytic = std::max(analytic, std::abs(spec.eigenvalues[1] - 9.0) / 9.0);
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "max deviation " << worst << ", {3,9} error " << analytic << ", " << failures << " errors, " << elapsed
         << " s";
  return {failures == 0 && worst <= 1e-8 && analytic <= 1e-12 && elapsed < 10.0, detail.str()};
}

Outcome spectral_order_check()
{
  const auto d2 = make({frac(1, 2), frac(1, 2)}, {frac(1, 2), frac(1, 2)}, {0, 1});
  const auto half = spectral_order(d2, 1e-14);
  const auto one = spectral_order(figures()[0], 1e-12);
  const auto none = spectral_order(make({frac(1, 2), frac(1, 2)}, {0, 0}, {0, 1}), 1e-12);
  const bool ok = half.order && std::abs(*half.order - 0.5) <= 1e-12 && one.order && *one.order == 0.0 &&
                  !none.order;
  std::ostringstream detail;
  detail.precision(17);
  detail << "D2 " << half.order.value_or(-1) << ", D1 " << one.order.value_or(-1) << ", D0 "
         << (none.order ? "defined" : "undefined");
  return {ok, detail.str()};
}

Outcome monotonicity_vs_scan()
{
  std::mt19937_64 rng(4242);
  int disagreements = 0, monotone = 0, reversed = 0;
  for (int trial = 0; trial < 500; ++trial)
  {
    const auto p = testsupport::random_d1(rng);
    reversed += p.reversed(require_khat(p));
    const bool up = is_nondecreasing(p).holds;
    monotone += up;
    disagreements += up != testsupport::scan_monotone(p, 8, true);
  }
  std::ostringstream detail;
  detail << "500 sets (" << reversed << " reversed at khat, " << monotone << " nondecreasing), " << disagreements
         << " disagreements";
  return {disagreements == 0, detail.str()};
}

Outcome squaring_check()
{
  std::mt19937_64 rng(99);
  testsupport::D1Options opt;
  opt.force_reversed = true;
  int bad_distance = 0, bad_point = 0;
  for (int trial = 0; trial < 100; ++trial)
  {
    const auto p = testsupport::random_d1(rng, opt);
    const auto sq = square_params(p);
    const auto check = verify_square(p, 5, 1.0, Number(0));
    bad_distance += !(check.distance.is_exact() && check.distance.is_zero());
    bad_point += !(singular_point(sq.canonical) == singular_point(p) && singular_point(sq.composed) == singular_point(p));
  }
  return {bad_distance == 0 && bad_point == 0, "100 sets, " + std::to_string(bad_distance) + " nonzero distances, " +
                                                  std::to_string(bad_point) + " singular-point mismatches"};
}

Outcome growth_diagnostic()
{
  const auto s = truncated_string(figures()[0], 12);
  const auto fit = growth_fit(spectrum_charpoly(s), 2);
  std::ostringstream detail;
  detail << s.size() << " eigenvalues, slope " << fit.slope << ", r^2 " << fit.r_squared;
  return {fit.r_squared > 0.99 && fit.slope > 0.0, detail.str()};
}

Outcome definiteness_linkage()
{
  std::mt19937_64 rng(555);
  int sets = 0, strings = 0, failures = 0;
  for (int trial = 0; trial < 2000 && sets < 100; ++trial)
  {
    const auto p = testsupport::random_d1(rng);
    if (!is_nondecreasing(p).holds)
      continue;
    ++sets;
    for (unsigned m = 1; m <= 8; ++m)
    {
      std::optional<StieltjesString> s;
      try
      {
        s = truncated_string(p, m);
      }
      catch (const Error &e)
      {
        if (e.code() != ErrorCode::EmptyString)
          ++failures;
        continue;
      }
      ++strings;
      if (!s->definite())
      {
        ++failures;
        continue;
      }
      for (const auto &z : spectrum_charpoly(*s).eigenvalues)
        failures += !(z.imag() == 0.0 && z.real() > 0.0);
    }
  }
  return {failures == 0 && sets > 0, std::to_string(sets) + " monotone sets, " + std::to_string(strings) +
                                         " strings, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main()
{
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"singular-point table", singular_point_table},
      {"classification table", classification_table},
      {"figure reproduction", figure_reproduction},
      {"contraction property", contraction_suite},
      {"oracle equivalence", oracle_equivalence},
      {"spectral order", spectral_order_check},
      {"monotonicity criterion vs brute force", monotonicity_vs_scan},
      {"squaring", squaring_check},
      {"growth diagnostic", growth_diagnostic},
      {"definiteness linkage", definiteness_linkage},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i)
  {
    Outcome out;
    try
    {
      out = criteria[i].second();
    }
    catch (const std::exception &e)
    {
      out = {false, std::string("exception: ") + e.what()};
    }
    failed += !out.pass;
    std::printf("criterion %2zu %s: %s (%s)\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].first,
                out.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
