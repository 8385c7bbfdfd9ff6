#pragma once

#include <cstddef>
#include <vector>

#include "nucert/intersection_core.hpp"
#include "nucert/rational.hpp"

namespace nucert {

// Self-map of the simplex t -> (phi(t)/<L_t D_1>, ..., phi(t)/<L_t D_r>),
// phi(t) = (sum_i 1/<L_t D_i>)^{-1}. Its fixed points balance
// x_i <L_x D_i> across all i.
template <typename Scalar>
DivisorWeights<Scalar> fixed_point_map(const IntersectionForm& form, const DivisorWeights<Scalar>& t);

template <typename Scalar>
Scalar phi(const IntersectionForm& form, const DivisorWeights<Scalar>& t);

// max_i |x_i <L_x D_i> - phi(x)|.
double fixed_point_residual(const IntersectionForm& form, const std::vector<double>& x);

struct FixedPointResult {
  std::vector<double> x;
  double phi = 0.0;
  double residual = 0.0;
  long long iterations = 0;
  bool used_root_solve = false;
};

struct SolverOptions {
  double tolerance = 1e-12;
  long long max_iter = 100000;
};

// Damped iteration x <- (x + f(x))/2 from the barycenter for max_iter/2
// steps, then a Newton solve of {x_i(Gx)_i = x_r(Gx)_r, sum x = 1} kept
// inside the open simplex. Throws SolverError with the best residual if
// neither reaches the tolerance.
FixedPointResult solve_fixed_point(const IntersectionForm& form, const SolverOptions& options = {});

// <L_t^2>/<L_t D_i> + <L_t^2>^2 <D_i^2> / (6 <L_t D_i>^3) - r t_i.
// The first two terms are four times the nu lower bound for (L_t, D_i), so a
// positive margin certifies nu(L_t; D_i) > (r/4) t_i.
Rational strict_margin(const IntersectionForm& form, const ExactWeights& t, std::size_t i);

// Largest-remainder rounding of m*x to nonnegative integers summing to m.
// Ties go to the smaller index. Zeros are then lifted to 1, each taking a
// unit from the currently largest entry (smaller index on ties).
std::vector<long long> apportion(const std::vector<double>& x, long long m);

struct NuCertificate {
  std::vector<long long> m;  // multiplicities, L = sum m_i D_i
  long long denominator = 0;
  std::vector<Rational> lhs;  // 4 * nu_lb(L_y; D_i), y = m / denominator
  std::vector<Rational> rhs;  // r * y_i
  double residual = 0.0;
  bool assumed_ample = true;  // false when ampleness was checked on a toric surface

  std::size_t r() const { return m.size(); }
  std::vector<Rational> margins() const;
};

inline constexpr long long kDefaultDenominatorCap = 10000;

// Searches denominators m = r, r+1, ..., cap for the first apportioned y
// whose r margins are all exactly positive. Throws CertificationError if
// none is found.
NuCertificate rationalize(const IntersectionForm& form, const FixedPointResult& fixed_point,
                          long long denominator_cap = kDefaultDenominatorCap);

// Rebuilds lhs/rhs from (form, m, denominator) alone.
NuCertificate certificate_for(const IntersectionForm& form, std::vector<long long> m);

struct CertificateCheck {
  bool valid = false;
  std::vector<Rational> margins;
  std::vector<std::string> problems;
};

// Recomputes every margin from scratch in exact arithmetic.
CertificateCheck verify_certificate(const IntersectionForm& form, const std::vector<long long>& m,
                                    long long denominator);

// nu_lb(L; D_i) for the integral divisor L = sum_j m_j D_j.
std::vector<Rational> integral_nu_bounds(const IntersectionForm& form, const std::vector<long long>& m);

}  // namespace nucert
