#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "nucert/linear_algebra.hpp"
#include "nucert/multiplicity_solver.hpp"
#include "nucert/rational.hpp"
#include "nucert/toric_oracle.hpp"

namespace nucert {

// A decreasing filtration F^0 = V ⊇ F^1 ⊇ ... ⊇ F^K ⊋ 0 (F^{K+1} = 0).
using Flag = std::vector<Subspace>;

// Section x^u of O(bL) with its vanishing orders along the two divisors.
struct MonomialSection {
  LatticePoint exponent;
  std::array<long long, 2> orders;
};

// Space of sections q = h^0(bL) with two decreasing filtrations, known at
// least through their dimension profiles dim F_i^k (k = 0, 1, ..., ending in
// a single 0). A monomial model or explicit flags may be attached.
struct FilteredSectionSpace {
  long long dim = 0;
  std::array<std::vector<long long>, 2> profiles;
  std::optional<std::vector<MonomialSection>> monomials;
  std::optional<std::array<Flag, 2>> flags;
};

FilteredSectionSpace profile_space(long long dim, std::vector<long long> profile_j,
                                   std::vector<long long> profile_l);

// Largest mu with div(x^u) + bL - mu D effective. D must have nonnegative
// coefficients and be nonzero.
long long monomial_order(const ToricDivisor& bl, const ToricDivisor& d, const LatticePoint& u);

// Monomial model of Gamma(bL) filtered by vanishing along D_j and D_l.
// Profiles come from h^0(bL - k D_i) and are checked against the monomial
// order counts; a mismatch throws ContractError.
FilteredSectionSpace monomial_space(const ToricDivisor& bl, const ToricDivisor& dj, const ToricDivisor& dl);

// Explicit model in Q^dim. Each flag is listed level by level (F^0 first) as
// spanning vectors. Throws InputError unless F^0 is the whole space, levels
// strictly decrease, and the last level is nonzero.
FilteredSectionSpace explicit_space(std::size_t dim, const std::array<std::vector<std::vector<RVector>>, 2>& flags);

// Largest k with v in F^k.
long long flag_order(const Flag& flag, const RVector& v);

struct BasisElement {
  std::optional<LatticePoint> exponent;  // monomial model
  std::optional<RVector> vector;         // explicit model
  std::array<long long, 2> orders;
};

struct AdaptedBasis {
  std::vector<BasisElement> elements;
};

// For monomials the monomial basis itself. For explicit flags: for every
// (a, b), a complement of F^{a+1}∩G^b + F^a∩G^{b+1} inside F^a∩G^b.
// Profile-only spaces carry no vectors and throw InputError.
AdaptedBasis adapted_basis(const FilteredSectionSpace& space);

// #{s : mu_i(s) >= k} = dim F_i^k for every k, orders recomputed from the
// vectors when the model is explicit, and the elements form a basis.
bool is_adapted(const FilteredSectionSpace& space, const AdaptedBasis& basis, std::size_t i);

// sum_s mu_i(s); throws ContractError if the basis is not adapted to i.
long long mu_sum(const FilteredSectionSpace& space, const AdaptedBasis& basis, std::size_t i);

// sum_{mu >= 1} dim F_i^mu.
long long profile_tail_sum(const FilteredSectionSpace& space, std::size_t i);

// sum_{k >= 1} h^0(bL - k D), terms past k = b<L^2>/<L.D> vanish.
BigInt filtered_section_sum(const ToricDivisor& l, const ToricDivisor& d, long long b);

// sum_{k>=1} h^0(bL - kD_i) >= (1 + eps) h^0(bL) m_i b for every i.
bool b_admissible(const ToricDivisor& l, const std::vector<ToricDivisor>& divisors,
                  const std::vector<long long>& m, const Rational& eps, long long b);

struct BSearchResult {
  long long b = 0;
  long long q = 0;  // h^0(bL)
  std::vector<BigInt> section_sums;
  std::vector<Rational> thresholds;  // (1 + eps) q m_i b
  bool very_ample_assumed = true;
};

// Smallest b <= b_cap that is admissible. Throws PreconditionError unless
// nu_lb(L; D_i) > (1 + eps) m_i for all i, SolverError when the cap is hit.
BSearchResult find_epsilon_b(const ToricDivisor& l, const std::vector<ToricDivisor>& divisors,
                             const std::vector<long long>& m, const Rational& eps, long long b_cap);

// Half of min_i (nu_lb(L; D_i) / m_i - 1) for L = sum m_i D_i, with
// nu_lb(L; D_i) = denominator * lhs_i / 4. Throws InputError if that minimum
// is not positive.
Rational epsilon_from_certificate(const NuCertificate& cert);

}  // namespace nucert
