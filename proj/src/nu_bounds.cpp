#include "nucert/nu_bounds.hpp"

#include <string>

#include "nucert/errors.hpp"

namespace nucert {

namespace {

Rational q(long long v) { return make_rational(v); }

}  // namespace

Rational SurfacePair::alpha() const { return make_rational(l_dot_e, e_sq); }
Rational SurfacePair::beta() const { return make_rational(l_sq, l_dot_e); }

SurfacePair make_surface_pair(long long l_sq, long long l_dot_e, long long e_sq) {
  if (l_sq <= 0 || l_dot_e <= 0 || e_sq <= 0) {
    throw InputError("surface pair needs positive <L^2>, <L.E>, <E^2>; got (" +
                     std::to_string(l_sq) + ", " + std::to_string(l_dot_e) + ", " +
                     std::to_string(e_sq) + ")");
  }
  if (q(l_dot_e) * q(l_dot_e) < q(l_sq) * q(e_sq)) {
    throw InputError("Hodge index violated: <L.E>^2 = " + std::to_string(l_dot_e * l_dot_e) +
                     " < <L^2><E^2>; beta > alpha is not geometric");
  }
  return SurfacePair{l_sq, l_dot_e, e_sq};
}

Rational morse_lower_bound(const SurfacePair& p, long long n, long long k) {
  if (n < 1 || k < 1 || q(k) > p.alpha() * q(n)) {
    throw PreconditionError("Morse bound needs 1 <= k <= alpha*n; got n = " + std::to_string(n) +
                            ", k = " + std::to_string(k) + ", alpha = " +
                            to_fraction_string(p.alpha()));
  }
  const Rational nn = q(n), kk = q(k);
  return q(p.l_sq) * nn * nn / 2 - q(p.l_dot_e) * nn * kk + q(p.e_sq) * kk * kk / 2;
}

Rational nu_lower_bound(const Rational& l_sq, const Rational& l_dot_e, const Rational& e_sq) {
  const Rational beta = l_sq / l_dot_e;
  const Rational alpha = l_dot_e / e_sq;
  return beta / 4 + beta * beta / (24 * alpha);
}

Rational nu_lower_bound(const SurfacePair& p) {
  make_surface_pair(p.l_sq, p.l_dot_e, p.e_sq);
  return nu_lower_bound(q(p.l_sq), q(p.l_dot_e), q(p.e_sq));
}

Rational curve_nu(long long l_deg, long long e_deg) {
  if (l_deg <= 0 || e_deg <= 0) {
    throw InputError("curve degrees must be positive");
  }
  return make_rational(l_deg, 2 * e_deg);
}

BigInt section_sum(const H0Provider& provider, long long n) {
  BigInt sum = 0;
  const long long last = provider.last_nonzero_k(n);
  for (long long k = 1; k <= last; ++k) sum += static_cast<long>(provider.h0(n, k));
  return sum;
}

Rational truncated_nu(const H0Provider& provider, long long n) {
  if (n < 1) throw InputError("truncated nu needs n >= 1");
  const long long base = provider.h0(n, 0);
  if (base == 0) {
    throw InputError("h^0(nL) = 0 at n = " + std::to_string(n) + "; cannot normalize");
  }
  Rational out(section_sum(provider, n), BigInt(static_cast<long>(base)) * static_cast<long>(n));
  out.canonicalize();
  return out;
}

NuWindow truncated_nu_window(const H0Provider& provider, long long first_n, long long last_n) {
  if (first_n < 1 || last_n < first_n) throw InputError("window needs 1 <= n0 <= n");
  NuWindow w;
  w.first_n = first_n;
  for (long long n = first_n; n <= last_n; ++n) {
    w.values.push_back(truncated_nu(provider, n));
    if (n == first_n || w.values.back() < w.running_min) w.running_min = w.values.back();
  }
  return w;
}

}  // namespace nucert
