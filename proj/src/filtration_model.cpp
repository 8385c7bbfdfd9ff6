#include "nucert/filtration_model.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nucert/errors.hpp"
#include "nucert/nu_bounds.hpp"

namespace nucert {

namespace {

void check_profile(long long dim, const std::vector<long long>& profile) {
  if (profile.empty() || profile.front() != dim) throw InputError("profile must start at the space dimension");
  if (profile.back() != 0) throw InputError("profile must end at 0");
  for (std::size_t k = 1; k < profile.size(); ++k) {
    if (profile[k] > profile[k - 1]) throw InputError("profile must be weakly decreasing");
  }
  if (profile.size() >= 2 && profile[profile.size() - 2] == 0) {
    throw InputError("profile must end with a single 0");
  }
}

const Subspace& level(const Flag& flag, std::size_t k, const Subspace& zero) {
  return k < flag.size() ? flag[k] : zero;
}

}  // namespace

FilteredSectionSpace profile_space(long long dim, std::vector<long long> profile_j,
                                   std::vector<long long> profile_l) {
  if (dim < 0) throw InputError("negative dimension");
  check_profile(dim, profile_j);
  check_profile(dim, profile_l);
  FilteredSectionSpace s;
  s.dim = dim;
  s.profiles = {std::move(profile_j), std::move(profile_l)};
  return s;
}

long long monomial_order(const ToricDivisor& bl, const ToricDivisor& d, const LatticePoint& u) {
  if (!(bl.surface() == d.surface())) throw InputError("divisors live on different surfaces");
  if (!d.has_nonnegative_coeffs()) throw InputError("filtration divisor needs nonnegative coefficients");
  const auto& s = bl.surface();
  long long best = -1;
  for (std::size_t rho = 0; rho < s.size(); ++rho) {
    const long long c = d.coeffs()[rho];
    if (c == 0) continue;
    const long long order = s.ray(rho).x * u[0] + s.ray(rho).y * u[1] + bl.coeffs()[rho];
    if (order < 0) throw InputError("exponent lies outside the section polygon");
    const long long mu = order / c;
    if (best < 0 || mu < best) best = mu;
  }
  if (best < 0) throw InputError("filtration divisor is zero");
  return best;
}

FilteredSectionSpace monomial_space(const ToricDivisor& bl, const ToricDivisor& dj, const ToricDivisor& dl) {
  FilteredSectionSpace space;
  std::vector<MonomialSection> sections;
  std::array<long long, 2> max_order{0, 0};
  const std::array<const ToricDivisor*, 2> ds{&dj, &dl};
  for (const auto& u : lattice_points(bl)) {
    MonomialSection sec{u, {monomial_order(bl, dj, u), monomial_order(bl, dl, u)}};
    for (std::size_t i = 0; i < 2; ++i) max_order[i] = std::max(max_order[i], sec.orders[i]);
    sections.push_back(sec);
  }
  space.dim = static_cast<long long>(sections.size());
  for (std::size_t i = 0; i < 2; ++i) {
    auto& profile = space.profiles[i];
    const long long top = sections.empty() ? -1 : max_order[i];
    for (long long k = 0; k <= top + 1; ++k) {
      const long long dim_k = h0(bl - *ds[i] * k);
      const auto count = std::count_if(sections.begin(), sections.end(),
                                       [&](const MonomialSection& s) { return s.orders[i] >= k; });
      if (dim_k != count) {
        throw ContractError("monomial order count " + std::to_string(count) + " differs from h0 = " +
                            std::to_string(dim_k) + " at level " + std::to_string(k));
      }
      profile.push_back(dim_k);
    }
  }
  space.monomials = std::move(sections);
  return space;
}

FilteredSectionSpace explicit_space(std::size_t dim, const std::array<std::vector<std::vector<RVector>>, 2>& flags) {
  FilteredSectionSpace space;
  space.dim = static_cast<long long>(dim);
  std::array<Flag, 2> built;
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto& gens : flags[i]) built[i].push_back(Subspace::span(dim, gens));
    if (built[i].empty() || !(built[i].front() == Subspace::whole(dim))) {
      throw InputError("filtration " + std::to_string(i + 1) + " must start with the whole space");
    }
    for (std::size_t k = 1; k < built[i].size(); ++k) {
      if (!built[i][k - 1].contains(built[i][k]) || built[i][k].dim() == built[i][k - 1].dim()) {
        throw InputError("filtration " + std::to_string(i + 1) + " is not strictly decreasing at level " +
                         std::to_string(k));
      }
    }
    if (built[i].back().dim() == 0) throw InputError("list only nonzero levels; the next level is 0");
    for (const auto& lvl : built[i]) space.profiles[i].push_back(static_cast<long long>(lvl.dim()));
    space.profiles[i].push_back(0);
  }
  space.flags = std::move(built);
  return space;
}

long long flag_order(const Flag& flag, const RVector& v) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; })) {
    throw InputError("the zero vector has no finite order");
  }
  long long k = -1;
  while (k + 1 < static_cast<long long>(flag.size()) && flag[static_cast<std::size_t>(k + 1)].contains(v)) ++k;
  return k;
}

AdaptedBasis adapted_basis(const FilteredSectionSpace& space) {
  AdaptedBasis basis;
  if (space.monomials) {
    for (const auto& sec : *space.monomials) basis.elements.push_back({sec.exponent, std::nullopt, sec.orders});
    return basis;
  }
  if (!space.flags) throw InputError("a dimension profile alone does not determine basis vectors");

  const auto& [f, g] = *space.flags;
  const auto n = static_cast<std::size_t>(space.dim);
  const Subspace zero(n);
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      const Subspace stratum = intersect(f[a], g[b]);
      Subspace covered = intersect(level(f, a + 1, zero), g[b]) + intersect(f[a], level(g, b + 1, zero));
      for (const auto& v : stratum.basis()) {
        if (covered.contains(v)) continue;
        basis.elements.push_back({std::nullopt, v, {static_cast<long long>(a), static_cast<long long>(b)}});
        covered = covered + Subspace::span(n, {v});
      }
    }
  }
  if (static_cast<long long>(basis.elements.size()) != space.dim) {
    throw ContractError("greedy selection produced " + std::to_string(basis.elements.size()) +
                        " vectors for a space of dimension " + std::to_string(space.dim));
  }
  return basis;
}

bool is_adapted(const FilteredSectionSpace& space, const AdaptedBasis& basis, std::size_t i) {
  if (i > 1) throw InputError("filtration index must be 0 or 1");
  if (static_cast<long long>(basis.elements.size()) != space.dim) return false;

  if (space.flags) {
    std::vector<RVector> rows;
    for (const auto& e : basis.elements) {
      if (!e.vector) return false;
      if (flag_order((*space.flags)[i], *e.vector) != e.orders[i]) return false;
      rows.push_back(*e.vector);
    }
    if (static_cast<long long>(rank_of(rows)) != space.dim) return false;
  } else if (space.monomials) {
    std::map<LatticePoint, std::array<long long, 2>> known;
    for (const auto& sec : *space.monomials) known[sec.exponent] = sec.orders;
    std::map<LatticePoint, int> seen;
    for (const auto& e : basis.elements) {
      if (!e.exponent) return false;
      auto it = known.find(*e.exponent);
      if (it == known.end() || it->second[i] != e.orders[i] || ++seen[*e.exponent] > 1) return false;
    }
  }

  const auto& profile = space.profiles[i];
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const auto count = std::count_if(basis.elements.begin(), basis.elements.end(), [&](const BasisElement& e) {
      return e.orders[i] >= static_cast<long long>(k);
    });
    if (count != profile[k]) return false;
  }
  return true;
}

long long mu_sum(const FilteredSectionSpace& space, const AdaptedBasis& basis, std::size_t i) {
  if (!is_adapted(space, basis, i)) {
    throw ContractError("basis is not adapted to filtration " + std::to_string(i + 1));
  }
  long long total = 0;
  for (const auto& e : basis.elements) total += e.orders[i];
  return total;
}

long long profile_tail_sum(const FilteredSectionSpace& space, std::size_t i) {
  if (i > 1) throw InputError("filtration index must be 0 or 1");
  long long total = 0;
  for (std::size_t k = 1; k < space.profiles[i].size(); ++k) total += space.profiles[i][k];
  return total;
}

BigInt filtered_section_sum(const ToricDivisor& l, const ToricDivisor& d, long long b) {
  const long long l_sq = intersection_number(l, l);
  const long long l_d = intersection_number(l, d);
  if (l_d <= 0) throw InputError("<L.D> must be positive");
  const long long last = floor_div(b * l_sq, l_d);
  const ToricDivisor bl = l * b;
  BigInt sum = 0;
  for (long long k = 1; k <= last; ++k) sum += static_cast<long>(h0(bl - d * k));
  return sum;
}

namespace {

Rational threshold(const Rational& eps, long long q, long long mi, long long b) {
  return (1 + eps) * make_rational(q) * make_rational(mi) * make_rational(b);
}

}  // namespace

bool b_admissible(const ToricDivisor& l, const std::vector<ToricDivisor>& divisors,
                  const std::vector<long long>& m, const Rational& eps, long long b) {
  if (divisors.size() != m.size()) throw InputError("one multiplicity per divisor is required");
  const long long q = h0(l * b);
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (Rational(filtered_section_sum(l, divisors[i], b)) < threshold(eps, q, m[i], b)) return false;
  }
  return true;
}

BSearchResult find_epsilon_b(const ToricDivisor& l, const std::vector<ToricDivisor>& divisors,
                             const std::vector<long long>& m, const Rational& eps, long long b_cap) {
  if (divisors.size() != m.size() || divisors.empty()) throw InputError("one multiplicity per divisor is required");
  if (sgn(eps) <= 0) throw InputError("epsilon must be positive");
  if (b_cap < 1) throw InputError("b cap must be at least 1");
  if (!is_ample(l)) throw InputError("L is not ample");
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (!is_ample(divisors[i])) throw InputError("D_" + std::to_string(i + 1) + " is not ample");
    if (m[i] < 1) throw InputError("multiplicities must be >= 1");
    const auto pair = make_surface_pair(intersection_number(l, l), intersection_number(l, divisors[i]),
                                        intersection_number(divisors[i], divisors[i]));
    const Rational bound = nu_lower_bound(pair);
    const Rational needed = (1 + eps) * make_rational(m[i]);
    if (!(bound > needed)) {
      throw PreconditionError("precondition nu_lb(L; D_" + std::to_string(i + 1) + ") > (1+eps) m_" +
                              std::to_string(i + 1) + " fails: " + to_fraction_string(bound) +
                              " <= " + to_fraction_string(needed));
    }
  }
  for (long long b = 1; b <= b_cap; ++b) {
    if (!b_admissible(l, divisors, m, eps, b)) continue;
    BSearchResult out;
    out.b = b;
    out.q = h0(l * b);
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      out.section_sums.push_back(filtered_section_sum(l, divisors[i], b));
      out.thresholds.push_back(threshold(eps, out.q, m[i], b));
    }
    return out;
  }
  throw SolverError("no admissible b up to " + std::to_string(b_cap));
}

Rational epsilon_from_certificate(const NuCertificate& cert) {
  if (cert.m.empty() || cert.lhs.size() != cert.m.size()) throw InputError("malformed certificate");
  Rational best;
  for (std::size_t i = 0; i < cert.m.size(); ++i) {
    if (cert.m[i] < 1) throw InputError("multiplicities must be >= 1");
    const Rational nu = make_rational(cert.denominator) * cert.lhs[i] / 4;
    const Rational slack = nu / make_rational(cert.m[i]) - 1;
    if (sgn(slack) <= 0) {
      throw InputError("nu_lb(L; D_" + std::to_string(i + 1) + ") = " + to_fraction_string(nu) +
                       " does not exceed m_" + std::to_string(i + 1) + "; no admissible epsilon");
    }
    if (i == 0 || slack < best) best = slack;
  }
  return best / 2;
}

}  // namespace nucert
