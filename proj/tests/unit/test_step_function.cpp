#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/step_function.hpp"
#include "support/generators.hpp"

using selfsim::Interval;
using selfsim::Number;
using selfsim::Piece;
using selfsim::StepFunction;
using testsupport::frac;

namespace
{

StepFunction staircase()
{
  std::vector<Piece> p{{Number(0), frac(1, 2), Number(0)},
                       {frac(1, 2), frac(3, 4), frac(1, 2)},
                       {frac(3, 4), Number(1), frac(3, 4)}};
  return StepFunction::from_pieces(p);
}

}  // namespace

TEST_CASE("construction merges equal neighbours and rejects gaps")
{
  std::vector<Piece> p{{Number(0), frac(1, 3), Number(2)},
                       {frac(1, 3), frac(1, 2), Number(2)},
                       {frac(1, 2), Number(1), Number(5)}};
  auto f = StepFunction::from_pieces(p);
  CHECK(f.size() == 2);
  CHECK(f.breakpoints()[1] == frac(1, 2));

  std::vector<Piece> gap{{Number(0), frac(1, 3), Number(2)}, {frac(1, 2), Number(1), Number(5)}};
  CHECK_THROWS_AS(StepFunction::from_pieces(gap), selfsim::Error);
  std::vector<Piece> short_{{Number(0), frac(1, 3), Number(2)}};
  CHECK_THROWS_AS(StepFunction::from_pieces(short_), selfsim::Error);
  CHECK(StepFunction::constant(Number(4)).size() == 1);
}

TEST_CASE("evaluation uses the left limit at breakpoints")
{
  auto f = staircase();
  CHECK(f.evaluate(Number(0)) == Number(0));
  CHECK(f.evaluate(frac(1, 2)) == Number(0));
  CHECK(f.evaluate(frac(5, 8)) == frac(1, 2));
  CHECK(f.evaluate(frac(3, 4)) == frac(1, 2));
  CHECK(f.evaluate(Number(1)) == frac(3, 4));
}

TEST_CASE("restriction to a window")
{
  auto f = staircase();
  auto r = f.restrict_to({frac(1, 4), frac(5, 8)});
  REQUIRE(r.size() == 2);
  CHECK(r[0].left == frac(1, 4));
  CHECK(r[0].right == frac(1, 2));
  CHECK(r[1].right == frac(5, 8));
  CHECK(f.restrict_to({Number(0), Number(0)}).empty());
}

TEST_CASE("Lp distances")
{
  auto f = staircase();
  auto zero = StepFunction::constant(Number(0));
  // 1/4 * 1/2 + 1/4 * 3/4
  CHECK(lp_distance(f, zero, 1.0) == frac(5, 16));
  CHECK(lp_distance(f, zero, std::numeric_limits<double>::infinity()) == frac(3, 4));
  CHECK(lp_distance(f, zero, 2.0).to_double() == doctest::Approx(std::sqrt(0.25 * 0.25 + 0.25 * 0.5625)));
  CHECK(lp_distance(f, f, 1.0).is_zero());
  CHECK_THROWS_AS(lp_distance(f, zero, 0.9), selfsim::Error);
}

TEST_CASE("append_merged drops empty pieces")
{
  std::vector<Piece> run;
  append_merged(run, {Number(0), frac(1, 2), Number(1)});
  append_merged(run, {frac(1, 2), frac(1, 2), Number(7)});
  append_merged(run, {frac(1, 2), Number(1), Number(1)});
  REQUIRE(run.size() == 1);
  CHECK(run[0].right == Number(1));
}
