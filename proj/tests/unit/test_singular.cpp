#include <doctest.h>

#include <random>

#include "selfsim/error.hpp"
#include "selfsim/fixed_point.hpp"
#include "selfsim/singular.hpp"
#include "support/generators.hpp"

using selfsim::Discontinuity2ndKind;
using selfsim::FiniteLimit;
using selfsim::InfiniteLimit;
using selfsim::Jump1stKind;
using selfsim::Number;
using selfsim::RawParams;
using selfsim::SimilarityParams;
using selfsim::SingularCase;
using testsupport::frac;

namespace
{

SimilarityParams make(std::vector<Number> a, std::vector<Number> d, std::vector<Number> beta,
                      std::vector<bool> orient = {})
{
  return SimilarityParams::create(RawParams{std::move(a), std::move(d), std::move(beta), std::move(orient)});
}

const std::vector<Number> thirds{frac(1, 3), frac(1, 3), frac(1, 3)};

SimilarityParams fig1() { return make({frac(1, 2), frac(1, 2)}, {0, frac(1, 2)}, {0, frac(1, 2)}); }
SimilarityParams fig2() { return make({frac(1, 2), frac(1, 4), frac(1, 4)}, {0, 0, 1}, {1, 0, 0}); }
SimilarityParams fig3() { return make(thirds, {0, 2, 0}, {1, 1, 0}); }
SimilarityParams fig4() { return make(thirds, {0, 2, 0}, {1, 1, -2}); }

}  // namespace

TEST_CASE("singular points")
{
  CHECK(singular_point(fig1()) == Number(1));
  CHECK(singular_point(fig2()) == Number(1));
  CHECK(singular_point(fig3()) == frac(1, 2));
  CHECK(singular_point(fig4()) == frac(1, 2));
  auto rev = make({frac(1, 2), frac(1, 2)}, {0, frac(-1, 2)}, {0, frac(1, 2)}, {false, true});
  CHECK(singular_point(rev) == frac(2, 3));
  auto first = make({frac(1, 4), frac(3, 4)}, {frac(1, 2), 0}, {1, 0});
  CHECK(singular_point(first) == Number(0));
  auto d0 = make({frac(1, 2), frac(1, 2)}, {0, 0}, {0, 1});
  CHECK_THROWS_AS(singular_point(d0), selfsim::Error);
}

TEST_CASE("nested intervals")
{
  CHECK(nested_interval(fig1(), 2) == selfsim::Interval{frac(3, 4), Number(1)});
  CHECK(nested_interval(fig3(), 1) == selfsim::Interval{frac(1, 3), frac(2, 3)});
  auto rev = make({frac(1, 2), frac(1, 2)}, {0, frac(-1, 2)}, {0, frac(1, 2)}, {false, true});
  auto deep = nested_interval(rev, 30);
  CHECK(deep.contains(frac(2, 3)));
  CHECK(deep.length() == pow(frac(1, 2), 30));
}

TEST_CASE("the singular point lies in every nest level")
{
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial)
  {
    auto p = testsupport::random_d1(rng);
    const auto x = singular_point(p);
    const Number a = p.a()[require_khat(p)];
    for (unsigned m = 1; m <= 20; ++m)
    {
      auto iv = nested_interval(p, m);
      CHECK(iv.contains(x));
      CHECK(iv.length() == pow(a, m));
    }
    if (p.reversed(require_khat(p)))
    {
      CHECK(Number(0) < x);
      CHECK(x < Number(1));
    }
  }
}

TEST_CASE("figure case table")
{
  auto r1 = classify_singularity(fig1());
  CHECK(r1.case_label == SingularCase::C1);
  REQUIRE(std::holds_alternative<FiniteLimit>(r1.kind));
  CHECK(std::get<FiniteLimit>(r1.kind).value == Number(1));

  auto r2 = classify_singularity(fig2());
  CHECK(r2.case_label == SingularCase::C2b);
  CHECK(std::holds_alternative<Discontinuity2ndKind>(r2.kind));

  auto r3 = classify_singularity(fig3());
  CHECK(r3.case_label == SingularCase::C3a);
  REQUIRE(std::holds_alternative<InfiniteLimit>(r3.kind));
  CHECK(std::get<InfiniteLimit>(r3.kind).sign == 1);

  auto r4 = classify_singularity(fig4());
  CHECK(r4.case_label == SingularCase::C3b);
  CHECK(std::holds_alternative<Discontinuity2ndKind>(r4.kind));
  CHECK_FALSE(r4.left_limit.has_value());
  CHECK_FALSE(r4.right_limit.has_value());
}

TEST_CASE("remaining cases")
{
  auto c2a = classify_singularity(make(thirds, {0, 1, 0}, {1, 0, 2}));
  CHECK(c2a.case_label == SingularCase::C2a);
  REQUIRE(std::holds_alternative<Jump1stKind>(c2a.kind));
  CHECK(std::get<Jump1stKind>(c2a.kind).left == Number(1));
  CHECK(std::get<Jump1stKind>(c2a.kind).right == Number(2));

  auto c2c = classify_singularity(make(thirds, {0, 1, 0}, {1, -1, 2}));
  CHECK(c2c.case_label == SingularCase::C2c);
  CHECK(std::get<InfiniteLimit>(c2c.kind).sign == -1);

  auto c3a_neg = classify_singularity(make(thirds, {0, 2, 0}, {-1, -1, -3}));
  CHECK(c3a_neg.case_label == SingularCase::C3a);
  CHECK(std::get<InfiniteLimit>(c3a_neg.kind).sign == -1);

  // s_3 = 1 + (-1) = 0 counts as a sign change.
  CHECK(classify_singularity(make(thirds, {0, 2, 0}, {1, 1, -1})).case_label == SingularCase::C3b);

  auto c4 = classify_singularity(make(thirds, {0, -1, 0}, {1, 1, 0}));
  CHECK(c4.case_label == SingularCase::C4);
  CHECK(std::holds_alternative<Discontinuity2ndKind>(c4.kind));

  auto trivial = classify_singularity(make({frac(1, 2), frac(1, 2)}, {0, frac(1, 2)}, {1, frac(1, 2)}));
  CHECK(trivial.case_label == SingularCase::Trivial);
  CHECK(std::get<FiniteLimit>(trivial.kind).value == Number(1));
}

TEST_CASE("C3b one-sided limits")
{
  // khat = 2 of 4 with d_2 beta_1 + beta_2 = beta_1: 2*(-1) + 1 = -1.
  auto left = classify_singularity(make({frac(1, 4), frac(1, 4), frac(1, 4), frac(1, 4)}, {0, 2, 0, 0},
                                        {-1, 1, 3, -5}));
  CHECK(left.case_label == SingularCase::C3b);
  REQUIRE(left.left_limit.has_value());
  CHECK(*left.left_limit == Number(-1));
  CHECK_FALSE(left.right_limit.has_value());

  // khat = n-1 with d beta_n + beta_{n-1} = beta_n: 2*1 + (-1) = 1.
  auto right = classify_singularity(make({frac(1, 4), frac(1, 4), frac(1, 4), frac(1, 4)}, {0, 0, 2, 0},
                                         {-3, 0, -1, 1}));
  CHECK(right.case_label == SingularCase::C3b);
  REQUIRE(right.right_limit.has_value());
  CHECK(*right.right_limit == Number(1));
}

TEST_CASE("reversed khat is refused by the direct table")
{
  auto rev = make({frac(1, 2), frac(1, 2)}, {0, frac(-1, 2)}, {0, frac(1, 2)}, {false, true});
  try
  {
    classify_singularity(rev);
    FAIL("expected ReversedOrientationAtKhat");
  }
  catch (const selfsim::Error &e)
  {
    CHECK(e.code() == selfsim::ErrorCode::ReversedOrientationAtKhat);
  }
}

TEST_CASE("C1 plateaus converge to the limit with ratio |d_khat|")
{
  std::mt19937_64 rng(4);
  testsupport::D1Options opt;
  opt.max_abs_d = 1;
  for (int trial = 0; trial < 100; ++trial)
  {
    auto p = testsupport::random_d1(rng, opt);
    const std::size_t k = require_khat(p);
    if (p.reversed(k) || !(p.d()[k].abs() < Number(1)))
      continue;
    const Number limit = p.beta()[k] / (Number(1) - p.d()[k]);
    const std::size_t i = k == 0 ? 1 : 0;
    Number prev = (closed_form_level(p, 1, i) - limit).abs();
    for (unsigned j = 2; j <= 12; ++j)
    {
      Number cur = (closed_form_level(p, j, i) - limit).abs();
      CHECK(cur == p.d()[k].abs() * prev);
      prev = cur;
    }
  }
}

TEST_CASE("case table is total over random preserving D1 sets")
{
  std::mt19937_64 rng(9);
  testsupport::D1Options opt;
  opt.allow_reversed = false;
  for (int trial = 0; trial < 300; ++trial)
  {
    auto p = testsupport::random_d1(rng, opt);
    const auto r = classify_singularity(p);
    const Number dh = p.d()[require_khat(p)];
    switch (r.case_label)
    {
      case SingularCase::Trivial: CHECK(is_trivial_constant(p).has_value()); break;
      case SingularCase::C1: CHECK(dh.abs() < Number(1)); break;
      case SingularCase::C2a:
      case SingularCase::C2b:
      case SingularCase::C2c: CHECK(dh == Number(1)); break;
      case SingularCase::C3a:
      case SingularCase::C3b: CHECK(dh > Number(1)); break;
      case SingularCase::C4: CHECK(dh <= Number(-1)); break;
    }
  }
}

TEST_CASE("monotonicity examples")
{
  CHECK(is_nondecreasing(fig1()).holds);
  auto f1_no = is_nonincreasing(fig1());
  CHECK_FALSE(f1_no.holds);
  REQUIRE(f1_no.witness.has_value());
  CHECK(f1_no.witness->lhs == Number(0));
  CHECK(f1_no.witness->rhs == frac(1, 2));

  auto mirrored = make({frac(1, 2), frac(1, 2)}, {0, frac(1, 2)}, {0, frac(-1, 2)});
  CHECK(is_nonincreasing(mirrored).holds);

  auto v3 = is_nondecreasing(fig3());
  CHECK_FALSE(v3.holds);
  REQUIRE(v3.witness.has_value());
  CHECK(v3.witness->lhs == Number(3));
  CHECK(v3.witness->rhs == Number(1));

  auto negative = make(thirds, {0, frac(-1, 2), 0}, {0, 1, 2});
  auto vn = is_nondecreasing(negative);
  CHECK_FALSE(vn.holds);
  CHECK(vn.witness->inequality == "d[2] > 0");

  auto constant = make({frac(1, 2), frac(1, 2)}, {0, frac(1, 2)}, {1, frac(1, 2)});
  CHECK(is_nondecreasing(constant).holds);
  CHECK(is_nonincreasing(constant).holds);
}

TEST_CASE("criterion agrees with the brute-force scan in both directions")
{
  std::mt19937_64 rng(31);
  int monotone = 0;
  for (int trial = 0; trial < 400; ++trial)
  {
    auto p = testsupport::random_d1(rng);
    const bool up = is_nondecreasing(p).holds;
    const bool down = is_nonincreasing(p).holds;
    monotone += up || down;
    CHECK(up == testsupport::scan_monotone(p, 8, true));
    CHECK(down == testsupport::scan_monotone(p, 8, false));
  }
  CHECK(monotone > 20);
}
