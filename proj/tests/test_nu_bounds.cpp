#include "doctest.h"
#include "nucert/errors.hpp"
#include "nucert/nu_bounds.hpp"
#include "nucert/toric_oracle.hpp"
#include "oracles.hpp"

using namespace nucert;

namespace {

H0Provider p2_provider(long long l_deg, long long e_deg) {
  return {[=](long long n, long long k) { return testing::p2_h0(l_deg * n - e_deg * k); },
          [=](long long n) { return floor_div(l_deg * l_deg * n, l_deg * e_deg); }};
}

H0Provider p1xp1_diagonal_provider() {
  return {[](long long n, long long k) { return testing::p1xp1_h0(n - k, n - k); },
          [](long long n) { return n; }};
}

H0Provider curve_provider(long long a, long long b) {
  return {[=](long long n, long long k) { return curve_h0(a * n - b * k); },
          [=](long long n) { return floor_div(a * n, b); }};
}

}  // namespace

TEST_CASE("morse main term") {
  CHECK(morse_lower_bound(make_surface_pair(4, 2, 1), 10, 5) == Rational(225, 2));
  CHECK(testing::p2_h0(15) == 136);
  CHECK(Rational(136) >= Rational(225, 2));

  CHECK(morse_lower_bound(make_surface_pair(2, 2, 2), 5, 5) == 0);
  CHECK(morse_lower_bound(make_surface_pair(2, 2, 2), 4, 1) == 9);
  CHECK(testing::p1xp1_h0(3, 3) == 16);
}

TEST_CASE("morse bound refuses k outside [1, alpha n]") {
  const auto p = make_surface_pair(2, 2, 2);  // alpha = 1
  CHECK_THROWS_AS(morse_lower_bound(p, 5, 6), PreconditionError);
  CHECK_THROWS_AS(morse_lower_bound(p, 5, 0), PreconditionError);
}

TEST_CASE("nu lower bound closed form") {
  CHECK(nu_lower_bound(make_surface_pair(1, 1, 1)) == Rational(7, 24));
  CHECK(nu_lower_bound(make_surface_pair(2, 2, 2)) == Rational(7, 24));
  CHECK(nu_lower_bound(make_surface_pair(16, 4, 1)) == Rational(7, 6));
  CHECK_THROWS_AS(make_surface_pair(4, 1, 1), InputError);  // 1 < 4
  CHECK_THROWS_AS(make_surface_pair(0, 1, 1), InputError);
}

TEST_CASE("nu lower bound scaling") {
  for (long long l_sq = 1; l_sq <= 6; ++l_sq) {
    for (long long l_e = 1; l_e <= 6; ++l_e) {
      for (long long e_sq = 1; e_sq <= 6; ++e_sq) {
        if (l_e * l_e < l_sq * e_sq) continue;
        const auto base = nu_lower_bound(make_surface_pair(l_sq, l_e, e_sq));
        for (long long c = 1; c <= 4; ++c) {
          CHECK(nu_lower_bound(make_surface_pair(c * c * l_sq, c * l_e, e_sq)) == make_rational(c) * base);
          CHECK(nu_lower_bound(make_surface_pair(l_sq, c * l_e, c * c * e_sq)) == base / make_rational(c));
        }
        if (l_e * l_e == l_sq * e_sq) {
          CHECK(base == Rational(7, 24) * make_rational(l_sq, l_e));
        }
      }
    }
  }
}

TEST_CASE("curve nu") {
  CHECK(curve_nu(1, 1) == Rational(1, 2));
  CHECK(curve_nu(3, 2) == Rational(3, 4));
  CHECK(curve_nu(2, 4) == Rational(1, 4));
  CHECK_THROWS_AS(curve_nu(0, 1), InputError);
  CHECK_THROWS_AS(curve_nu(1, -1), InputError);
  // The P1 oracle approaches the closed form.
  for (auto [a, b] : {std::pair{3LL, 2LL}, std::pair{2LL, 4LL}}) {
    const Rational t = truncated_nu(curve_provider(a, b), 1000);
    CHECK(abs(t - curve_nu(a, b)) < Rational(1, 1000));
  }
}

TEST_CASE("truncated nu on closed-form oracles") {
  CHECK(truncated_nu(p2_provider(1, 1), 3) == Rational(1, 3));
  CHECK(truncated_nu(p1xp1_diagonal_provider(), 2) == Rational(5, 18));
  CHECK(truncated_nu(p2_provider(1, 1), 1) == Rational(1, 3));
  CHECK(section_sum(p2_provider(1, 1), 3) == 10);
}

TEST_CASE("truncated nu rejects an empty normalizer") {
  H0Provider empty{[](long long, long long) { return 0LL; }, [](long long) { return 0LL; }};
  CHECK_THROWS_AS(truncated_nu(empty, 3), InputError);
}

TEST_CASE("section sum stops where every later term is zero") {
  // Sum to an overly generous bound and compare.
  for (long long l = 1; l <= 4; ++l) {
    for (long long e = 1; e <= 4; ++e) {
      auto p = p2_provider(l, e);
      for (long long n = 1; n <= 30; ++n) {
        BigInt brute = 0;
        const long long generous = (l * l * n + l * e - 1) / (l * e) + 5;
        for (long long k = 1; k <= generous; ++k) brute += static_cast<long>(p.h0(n, k));
        CHECK(section_sum(p, n) == brute);
      }
    }
  }
}

TEST_CASE("windowed running minimum") {
  const auto w = truncated_nu_window(curve_provider(1, 3), 5, 12);
  CHECK(w.values.size() == 8);
  Rational lo = w.values.front();
  for (const auto& v : w.values) lo = v < lo ? v : lo;
  CHECK(w.running_min == lo);
  CHECK_THROWS_AS(truncated_nu_window(curve_provider(1, 1), 5, 4), InputError);
}
