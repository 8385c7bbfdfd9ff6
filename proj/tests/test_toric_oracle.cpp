#include "doctest.h"
#include "nucert/errors.hpp"
#include "nucert/toric_oracle.hpp"
#include "oracles.hpp"

using namespace nucert;

namespace {

const ToricSurface kP2 = ToricSurface::projective_plane();
const ToricSurface kP1xP1 = ToricSurface::p1xp1();

}  // namespace

TEST_CASE("h0 on P2 and P1xP1 matches closed forms") {
  CHECK(h0(line_class(kP2, 3)) == 10);
  CHECK(h0(bidegree_class(kP1xP1, 2, 3)) == 12);
  for (long long d = 0; d <= 50; ++d) CHECK(h0(line_class(kP2, d)) == testing::p2_h0(d));
  for (long long a = 0; a <= 50; ++a) {
    for (long long b = 0; b <= 50; ++b) CHECK(h0(bidegree_class(kP1xP1, a, b)) == testing::p1xp1_h0(a, b));
  }
}

TEST_CASE("h0 of an infeasible polygon is 0") {
  CHECK(h0(line_class(kP2, -1)) == 0);
  CHECK(h0(bidegree_class(kP1xP1, 2, -1)) == 0);
  CHECK(divisor_polygon(line_class(kP2, -2)).empty());
}

TEST_CASE("row scan agrees with bounding-box enumeration on every surface") {
  for (long long e = 0; e <= 4; ++e) {
    const auto s = ToricSurface::hirzebruch(e);
    for (long long a0 = -2; a0 <= 3; ++a0) {
      for (long long a1 = -2; a1 <= 3; ++a1) {
        for (long long a3 = -1; a3 <= 3; ++a3) {
          const ToricDivisor d(s, {a0, a1, 1, a3});
          CHECK(h0(d) == testing::brute_force_h0(d, 30));
        }
      }
    }
  }
  // A user fan: P2 blown up at a fixed point.
  const ToricSurface blowup({{1, 0}, {1, 1}, {0, 1}, {-1, -1}});
  for (long long a = 0; a <= 4; ++a) {
    const ToricDivisor d(blowup, {a, 1, 2, a + 1});
    CHECK(h0(d) == testing::brute_force_h0(d, 30));
  }
}

TEST_CASE("intersection numbers from the fan") {
  CHECK(intersection_number(bidegree_class(kP1xP1, 1, 1), bidegree_class(kP1xP1, 1, 1)) == 2);
  for (long long a = 0; a < 4; ++a) {
    for (long long b = 0; b < 4; ++b) {
      CHECK(intersection_number(bidegree_class(kP1xP1, a, b), bidegree_class(kP1xP1, 2, 3)) == a * 3 + b * 2);
    }
  }
  const auto f1 = ToricSurface::hirzebruch(1);
  const auto s = ToricDivisor::prime(f1, 1), f = ToricDivisor::prime(f1, 0);
  CHECK(intersection_number(s, s) == -1);
  CHECK(intersection_number(s, f) == 1);
  CHECK(intersection_number(f, f) == 0);
  CHECK(intersection_number(line_class(kP2, 1), line_class(kP2, 1)) == 1);
}

TEST_CASE("self-intersections reproduce the classical values") {
  CHECK(kP2.prime_pairing(0, 0) == 1);
  CHECK(kP1xP1.prime_pairing(0, 0) == 0);
  for (long long e = 0; e <= 4; ++e) {
    const auto s = ToricSurface::hirzebruch(e);
    CHECK(s.prime_pairing(1, 1) == -e);
    CHECK(s.prime_pairing(3, 3) == e);
    CHECK(s.prime_pairing(0, 0) == 0);
  }
}

TEST_CASE("intersection pairing is symmetric and linearly invariant") {
  // Principal divisors div(x^m) = sum <m, v_rho> D_rho pair to zero with everything.
  for (long long e = 0; e <= 3; ++e) {
    const auto s = ToricSurface::hirzebruch(e);
    for (auto [mx, my] : {std::pair{1LL, 0LL}, std::pair{0LL, 1LL}}) {
      std::vector<long long> c;
      for (const auto& v : s.rays()) c.push_back(mx * v.x + my * v.y);
      const ToricDivisor principal(s, c);
      for (std::size_t rho = 0; rho < s.size(); ++rho) {
        CHECK(intersection_number(principal, ToricDivisor::prime(s, rho)) == 0);
      }
    }
    const ToricDivisor a(s, {1, 2, 0, 3}), b(s, {2, 0, 1, 1});
    CHECK(intersection_number(a, b) == intersection_number(b, a));
  }
}

TEST_CASE("ampleness") {
  CHECK(is_ample(line_class(kP2, 1)));
  CHECK_FALSE(is_ample(ToricDivisor::prime(ToricSurface::hirzebruch(1), 1)));
  CHECK_FALSE(is_ample(bidegree_class(kP1xP1, 1, 0)));
  CHECK(is_nef(bidegree_class(kP1xP1, 1, 0)));
  for (long long a = 1; a <= 3; ++a) {
    for (long long b = 1; b <= 3; ++b) CHECK(is_ample(bidegree_class(ToricSurface::hirzebruch(1), a, b)));
  }
}

TEST_CASE("h0 is nonincreasing along nL - kE") {
  const auto f1 = ToricSurface::hirzebruch(1);
  const std::vector<std::pair<ToricDivisor, ToricDivisor>> pairs = {
      {line_class(kP2, 3), line_class(kP2, 1)},
      {bidegree_class(kP1xP1, 2, 1), bidegree_class(kP1xP1, 1, 3)},
      {bidegree_class(f1, 1, 2), bidegree_class(f1, 3, 1)},
  };
  for (const auto& [l, e] : pairs) {
    for (long long n = 1; n <= 50; n += 7) {
      long long prev = h0(l * n);
      for (long long k = 1; prev > 0; ++k) {
        const long long cur = h0(l * n - e * k);
        CHECK(cur <= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("intersection form of ample tuples") {
  const auto four_lines = intersection_form_of(std::vector<ToricDivisor>(4, line_class(kP2, 1)));
  CHECK(four_lines == testing::constant_form(4, 1));
  std::vector<ToricDivisor> degrees;
  for (long long d = 1; d <= 4; ++d) degrees.push_back(line_class(kP2, d));
  CHECK(intersection_form_of(degrees) == testing::rank_one_form({1, 2, 3, 4}));
  CHECK(intersection_form_of(std::vector<ToricDivisor>(4, bidegree_class(kP1xP1, 1, 1))) ==
        testing::constant_form(4, 2));
  CHECK_THROWS_AS(intersection_form_of({bidegree_class(kP1xP1, 1, 0)}), InputError);

  const auto f2 = ToricSurface::hirzebruch(2);
  std::vector<ToricDivisor> mixed;
  for (long long a = 1; a <= 3; ++a) mixed.push_back(bidegree_class(f2, a, 4 - a));
  CHECK(validate_form(intersection_form_of(mixed)).ok());
}

TEST_CASE("curve h0") {
  CHECK(curve_h0(0) == 1);
  CHECK(curve_h0(5) == 6);
  CHECK(curve_h0(-1) == 0);
}

TEST_CASE("fan validation") {
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {0, 1}}), InputError);
  CHECK_THROWS_AS(ToricSurface({{2, 0}, {0, 1}, {-1, -1}}), InputError);
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {-1, -1}, {0, 1}}), InputError);  // clockwise
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {1, 2}, {-1, -1}}), InputError);  // singular cone
  CHECK_NOTHROW(ToricSurface({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}));
}

TEST_CASE("proper intersection") {
  SUBCASE("four lines in P2: three invariant, one general") {
    std::vector<SupportedDivisor> ds;
    for (std::size_t rho = 0; rho < 3; ++rho) ds.push_back({ToricDivisor::prime(kP2, rho), false});
    ds.push_back({line_class(kP2, 1), true});
    const auto rep = proper_intersection_check(ds);
    CHECK(rep.passed);
    CHECK(rep.failures.empty());
    CHECK(rep.assumptions.size() == 3);  // the triples containing D_4
  }
  SUBCASE("shared component") {
    const auto rep = proper_intersection_check(
        {{ToricDivisor::prime(kP2, 0), false}, {ToricDivisor(kP2, {1, 1, 0}), false}});
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].find("D_1 and D_2") != std::string::npos);
  }
  SUBCASE("two rulings and a diagonal-class member on P1xP1") {
    const auto rep = proper_intersection_check({{ToricDivisor::prime(kP1xP1, 0), false},
                                                {ToricDivisor::prime(kP1xP1, 1), false},
                                                {bidegree_class(kP1xP1, 1, 1), true}});
    CHECK(rep.passed);
    CHECK(rep.assumptions.size() == 1);
  }
  SUBCASE("general member of a class with a fixed component") {
    const auto f1 = ToricSurface::hirzebruch(1);
    const auto rep = proper_intersection_check({{ToricDivisor::prime(f1, 1), true}});
    CHECK_FALSE(rep.passed);
  }
}
