#pragma once

#include <functional>
#include <vector>

#include "nucert/rational.hpp"

namespace nucert {

// Intersection data (<L^2>, <L.E>, <E^2>) of an ample L and an ample
// effective E on a surface.
struct SurfacePair {
  long long l_sq = 0;
  long long l_dot_e = 0;
  long long e_sq = 0;

  // alpha = <L.E>/<E^2>, beta = <L^2>/<L.E>; Hodge index gives beta <= alpha.
  Rational alpha() const;
  Rational beta() const;
};

// Throws InputError unless all entries are positive and <L.E>^2 >= <L^2><E^2>.
SurfacePair make_surface_pair(long long l_sq, long long l_dot_e, long long e_sq);

// Main term of the Morse-type lower bound on h^0(nL - kM):
//   <L^2> n^2/2 - <L.M> n k + <M^2> k^2/2.
// The O(n) correction is surface-dependent and left to the caller.
// Throws PreconditionError unless 1 <= k <= alpha * n.
Rational morse_lower_bound(const SurfacePair& p, long long n, long long k);

// beta/4 + beta^2/(24 alpha), i.e. <L^2>/(4<LE>) + <L^2>^2<E^2>/(24<LE>^3).
Rational nu_lower_bound(const SurfacePair& p);

// Same closed form on rational intersection data (R-divisors L_t).
Rational nu_lower_bound(const Rational& l_sq, const Rational& l_dot_e, const Rational& e_sq);

// nu(L; E) on a curve: deg L / (2 deg E).
Rational curve_nu(long long l_deg, long long e_deg);

// Supplies exact h^0(nL - kE) for n >= 1, k >= 0, together with the index
// past which every term vanishes (k > <L^d> n / <L^{d-1} E>).
struct H0Provider {
  std::function<long long(long long n, long long k)> h0;
  std::function<long long(long long n)> last_nonzero_k;
};

// S_n = sum_{k >= 1} h^0(nL - kE).
BigInt section_sum(const H0Provider& provider, long long n);

// S_n / (h^0(nL) n). Throws InputError if h^0(nL) = 0.
Rational truncated_nu(const H0Provider& provider, long long n);

struct NuWindow {
  long long first_n = 0;
  std::vector<Rational> values;  // values[i] is truncated_nu at first_n + i
  Rational running_min;          // min over the window, a liminf proxy
};

NuWindow truncated_nu_window(const H0Provider& provider, long long first_n, long long last_n);

}  // namespace nucert
