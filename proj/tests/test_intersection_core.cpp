#include "doctest.h"
#include "nucert/errors.hpp"
#include "nucert/intersection_core.hpp"
#include "oracles.hpp"

#include <random>

using namespace nucert;

namespace {

ExactWeights w(std::initializer_list<Rational> c) { return ExactWeights(std::vector<Rational>(c)); }

}  // namespace

TEST_CASE("pairing of two lines in P2 at the barycenter") {
  const auto pv = pairing(testing::constant_form(2, 1), w({Rational(1, 2), Rational(1, 2)}));
  CHECK(pv.lt_dot_di == std::vector<Rational>{1, 1});
  CHECK(pv.lt_squared == 1);
}

TEST_CASE("pairing at a vertex reads a row of the form") {
  IntersectionForm g({{3, 2, 5}, {2, 1, 4}, {5, 4, 9}});
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Rational> e(3, Rational(0));
    e[i] = 1;
    const auto pv = pairing(g, ExactWeights(e));
    for (std::size_t j = 0; j < 3; ++j) CHECK(pv.lt_dot_di[j] == make_rational(g(i, j)));
    CHECK(pv.lt_squared == make_rational(g(i, i)));
  }
}

TEST_CASE("pairing on a rank-one form") {
  const auto pv = pairing(testing::rank_one_form({1, 2}), w({Rational(2, 3), Rational(1, 3)}));
  CHECK(pv.lt_dot_di == std::vector<Rational>{Rational(4, 3), Rational(8, 3)});
  CHECK(pv.lt_squared == Rational(16, 9));
}

TEST_CASE("pairing rejects a dimension mismatch") {
  CHECK_THROWS_AS(pairing(testing::constant_form(3, 1), barycenter(2)), InputError);
}

TEST_CASE("validate_form") {
  SUBCASE("Hodge violation") {
    const auto rep = validate_form(IntersectionForm({{2, 1}, {1, 2}}));
    REQUIRE_FALSE(rep.ok());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == FormViolation::Kind::kHodge);
    CHECK(rep.violations[0].i == 0);
    CHECK(rep.violations[0].j == 1);
  }
  SUBCASE("all ones") { CHECK(validate_form(testing::constant_form(2, 1)).ok()); }
  SUBCASE("Hodge boundary above") { CHECK(validate_form(IntersectionForm({{3, 2}, {2, 1}})).ok()); }
  SUBCASE("asymmetry and nonpositive entries are reported") {
    const auto rep = validate_form(IntersectionForm({{1, 2}, {3, 0}}));
    int asym = 0, nonpos = 0;
    for (const auto& v : rep.violations) {
      asym += v.kind == FormViolation::Kind::kAsymmetric;
      nonpos += v.kind == FormViolation::Kind::kNonPositive;
    }
    CHECK(asym == 1);
    CHECK(nonpos == 1);
  }
  SUBCASE("non-square is an input error") {
    CHECK_THROWS_AS(IntersectionForm({{1, 2}, {3}}), InputError);
  }
}

TEST_CASE("weights must lie on the simplex") {
  CHECK_THROWS_AS(ExactWeights({Rational(1, 2), Rational(1, 3)}), InputError);
  CHECK_THROWS_AS(ExactWeights({Rational(3, 2), Rational(-1, 2)}), InputError);
  CHECK_THROWS_AS(NumericWeights({0.5, 0.5 + 1e-9}), InputError);
  CHECK_NOTHROW(NumericWeights({0.5, 0.5 + 1e-14}));
}

TEST_CASE("pairing is affine in t and bilinear identity holds exactly") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(1, 9), weight(0, 12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 2 + trial % 4;
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i; j < r; ++j) m[i][j] = m[j][i] = entry(rng);
    }
    IntersectionForm g(m);
    auto random_point = [&] {
      std::vector<Rational> c(r);
      Rational total = 0;
      for (auto& x : c) total += (x = weight(rng) + 1);
      for (auto& x : c) x /= total;
      return ExactWeights(c);
    };
    const auto t = random_point(), s = random_point();
    Rational a(weight(rng), 13);
    a.canonicalize();
    std::vector<Rational> mix(r);
    for (std::size_t i = 0; i < r; ++i) mix[i] = a * t[i] + (1 - a) * s[i];
    const auto pt = pairing(g, t), ps = pairing(g, s), pm = pairing(g, ExactWeights(mix));
    Rational check_sq = 0;
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(pm.lt_dot_di[i] == a * pt.lt_dot_di[i] + (1 - a) * ps.lt_dot_di[i]);
      check_sq += t[i] * pt.lt_dot_di[i];
    }
    CHECK(pt.lt_squared == check_sq);
    if (validate_form(g).ok()) CHECK(sgn(pt.lt_squared) > 0);
  }
}
