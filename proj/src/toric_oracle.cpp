#include "nucert/toric_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "nucert/errors.hpp"

namespace nucert {

namespace {

long long det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

// 0 for directions in [0, pi), 1 for [pi, 2pi).
int half_of(const Ray& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(const Ray& a, const Ray& b) {
  const int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return det(a, b) > 0;
}

std::string ray_string(const Ray& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace

ToricSurface::ToricSurface(std::vector<Ray> rays) : rays_(std::move(rays)) {
  const std::size_t n = rays_.size();
  if (n < 3) throw InputError("a complete fan needs at least 3 rays");
  for (const auto& v : rays_) {
    if (std::gcd(v.x, v.y) != 1) throw InputError("ray " + ray_string(v) + " is not primitive");
  }
  int wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Ray& a = rays_[i];
    const Ray& b = rays_[(i + 1) % n];
    if (det(a, b) != 1) {
      throw InputError("consecutive rays " + ray_string(a) + ", " + ray_string(b) +
                       " do not form a positively oriented lattice basis");
    }
    if (!angle_less(a, b)) ++wraps;
  }
  if (wraps != 1) throw InputError("rays wind " + std::to_string(wraps) + " times around the origin");

  self_intersections_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Ray& prev = rays_[(i + n - 1) % n];
    const Ray& next = rays_[(i + 1) % n];
    const Ray& v = rays_[i];
    const Ray w{prev.x + next.x, prev.y + next.y};
    // Smoothness forces w to be an integer multiple of v.
    const long long s = v.x != 0 ? w.x / v.x : w.y / v.y;
    if (w.x != s * v.x || w.y != s * v.y) throw InputError("fan relation fails at ray " + ray_string(v));
    self_intersections_[i] = -s;
  }
}

ToricSurface ToricSurface::projective_plane() { return ToricSurface({{1, 0}, {0, 1}, {-1, -1}}); }

ToricSurface ToricSurface::p1xp1() { return hirzebruch(0); }

ToricSurface ToricSurface::hirzebruch(long long e) {
  if (e < 0) throw InputError("Hirzebruch index must be nonnegative");
  return ToricSurface({{1, 0}, {0, 1}, {-1, e}, {0, -1}});
}

long long ToricSurface::prime_pairing(std::size_t i, std::size_t j) const {
  const std::size_t n = rays_.size();
  if (i == j) return self_intersections_[i];
  if ((i + 1) % n == j || (j + 1) % n == i) return 1;
  return 0;
}

ToricDivisor::ToricDivisor(ToricSurface surface, std::vector<long long> coeffs)
    : surface_(std::move(surface)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != surface_.size()) {
    throw InputError("divisor has " + std::to_string(coeffs_.size()) + " coefficients, surface has " +
                     std::to_string(surface_.size()) + " rays");
  }
}

ToricDivisor ToricDivisor::prime(const ToricSurface& surface, std::size_t rho) {
  if (rho >= surface.size()) throw InputError("ray index out of range");
  std::vector<long long> c(surface.size(), 0);
  c[rho] = 1;
  return ToricDivisor(surface, std::move(c));
}

ToricDivisor ToricDivisor::operator+(const ToricDivisor& other) const {
  if (!(surface_ == other.surface_)) throw InputError("divisors live on different surfaces");
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return ToricDivisor(surface_, std::move(c));
}

ToricDivisor ToricDivisor::operator-(const ToricDivisor& other) const { return *this + other * -1; }

ToricDivisor ToricDivisor::operator*(long long k) const {
  auto c = coeffs_;
  for (auto& a : c) a *= k;
  return ToricDivisor(surface_, std::move(c));
}

bool ToricDivisor::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long a) { return a >= 0; });
}

ToricDivisor line_class(const ToricSurface& p2, long long degree) {
  if (!(p2 == ToricSurface::projective_plane())) throw InputError("degree classes exist only on P2");
  return ToricDivisor(p2, {0, 0, degree});
}

ToricDivisor bidegree_class(const ToricSurface& hirzebruch, long long a, long long b) {
  const auto& rays = hirzebruch.rays();
  if (rays.size() != 4 || !(rays[0] == Ray{1, 0}) || !(rays[1] == Ray{0, 1}) || rays[2].x != -1 ||
      !(rays[3] == Ray{0, -1})) {
    throw InputError("O(a,b) classes exist only on P1xP1 and Hirzebruch surfaces");
  }
  return ToricDivisor(hirzebruch, {a, 0, 0, b});
}

bool DivisorPolygon::contains(const LatticePoint& u) const {
  return std::all_of(half_planes.begin(), half_planes.end(), [&](const HalfPlane& h) {
    return h.normal.x * u[0] + h.normal.y * u[1] >= -h.offset;
  });
}

DivisorPolygon divisor_polygon(const ToricDivisor& d) {
  DivisorPolygon poly;
  const auto& s = d.surface();
  for (std::size_t i = 0; i < s.size(); ++i) poly.half_planes.push_back({s.ray(i), d.coeffs()[i]});

  // A nonempty bounded polygon has a vertex where two independent boundary
  // lines meet; enumerate all such points and keep the feasible ones.
  const auto& hp = poly.half_planes;
  for (std::size_t i = 0; i < hp.size(); ++i) {
    for (std::size_t j = i + 1; j < hp.size(); ++j) {
      const long long dt = det(hp[i].normal, hp[j].normal);
      if (dt == 0) continue;
      const long long ai = hp[i].offset, aj = hp[j].offset;
      RationalPoint p{make_rational(-ai * hp[j].normal.y + aj * hp[i].normal.y, dt),
                      make_rational(-aj * hp[i].normal.x + ai * hp[j].normal.x, dt)};
      const bool feasible = std::all_of(hp.begin(), hp.end(), [&](const HalfPlane& h) {
        return p.x * make_rational(h.normal.x) + p.y * make_rational(h.normal.y) >= make_rational(-h.offset);
      });
      if (feasible) poly.vertices.push_back(std::move(p));
    }
  }
  auto less = [](const RationalPoint& a, const RationalPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  };
  auto same = [](const RationalPoint& a, const RationalPoint& b) { return a.x == b.x && a.y == b.y; };
  std::sort(poly.vertices.begin(), poly.vertices.end(), less);
  poly.vertices.erase(std::unique(poly.vertices.begin(), poly.vertices.end(), same), poly.vertices.end());
  return poly;
}

namespace {

// Calls visit(y, lo, hi) for each integer row y whose x-range [lo, hi] is nonempty.
template <typename Visit>
void scan_rows(const DivisorPolygon& poly, Visit&& visit) {
  if (poly.empty()) return;
  Rational ymin = poly.vertices.front().y, ymax = ymin;
  for (const auto& v : poly.vertices) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const long long y_lo = ceil_of(ymin).get_si();
  const long long y_hi = floor_of(ymax).get_si();
  for (long long y = y_lo; y <= y_hi; ++y) {
    long long lo = std::numeric_limits<long long>::min();
    long long hi = std::numeric_limits<long long>::max();
    bool row_ok = true;
    for (const auto& h : poly.half_planes) {
      // normal.x * x >= rhs
      const long long rhs = -h.offset - h.normal.y * y;
      if (h.normal.x > 0) {
        lo = std::max(lo, ceil_div(rhs, h.normal.x));
      } else if (h.normal.x < 0) {
        hi = std::min(hi, floor_div(rhs, h.normal.x));
      } else if (rhs > 0) {
        row_ok = false;
        break;
      }
    }
    if (row_ok && lo <= hi) visit(y, lo, hi);
  }
}

}  // namespace

std::vector<LatticePoint> lattice_points(const ToricDivisor& d) {
  std::vector<LatticePoint> out;
  scan_rows(divisor_polygon(d), [&](long long y, long long lo, long long hi) {
    for (long long x = lo; x <= hi; ++x) out.push_back({x, y});
  });
  return out;
}

long long h0(const ToricDivisor& d) {
  long long count = 0;
  scan_rows(divisor_polygon(d), [&](long long, long long lo, long long hi) { count += hi - lo + 1; });
  return count;
}

long long intersection_number(const ToricDivisor& d, const ToricDivisor& e) {
  if (!(d.surface() == e.surface())) throw InputError("divisors live on different surfaces");
  const auto& s = d.surface();
  long long total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (d.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      total += d.coeffs()[i] * e.coeffs()[j] * s.prime_pairing(i, j);
    }
  }
  return total;
}

bool is_ample(const ToricDivisor& d) {
  for (std::size_t rho = 0; rho < d.surface().size(); ++rho) {
    if (intersection_number(d, ToricDivisor::prime(d.surface(), rho)) <= 0) return false;
  }
  return true;
}

bool is_nef(const ToricDivisor& d) {
  for (std::size_t rho = 0; rho < d.surface().size(); ++rho) {
    if (intersection_number(d, ToricDivisor::prime(d.surface(), rho)) < 0) return false;
  }
  return true;
}

IntersectionForm intersection_form_of(const std::vector<ToricDivisor>& divisors) {
  if (divisors.empty()) throw InputError("no divisors given");
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (!(divisors[i].surface() == divisors[0].surface())) {
      throw InputError("divisors live on different surfaces");
    }
    if (!is_ample(divisors[i])) throw InputError("divisor " + std::to_string(i + 1) + " is not ample");
  }
  const std::size_t r = divisors.size();
  std::vector<std::vector<long long>> m(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) m[i][j] = m[j][i] = intersection_number(divisors[i], divisors[j]);
  }
  return IntersectionForm(std::move(m));
}

long long curve_h0(long long degree) { return degree >= 0 ? degree + 1 : 0; }

ProperIntersectionReport proper_intersection_check(const std::vector<SupportedDivisor>& divisors) {
  ProperIntersectionReport report;
  auto fail = [&](std::string msg) {
    report.passed = false;
    report.failures.push_back(std::move(msg));
  };
  const std::size_t r = divisors.size();
  auto name = [](std::size_t i) { return "D_" + std::to_string(i + 1); };

  for (std::size_t i = 0; i < r; ++i) {
    const auto& d = divisors[i].divisor;
    if (!(d.surface() == divisors[0].divisor.surface())) throw InputError("divisors live on different surfaces");
    if (!d.has_nonnegative_coeffs() ||
        std::all_of(d.coeffs().begin(), d.coeffs().end(), [](long long a) { return a == 0; })) {
      fail(name(i) + " is not a nonzero effective invariant divisor");
      continue;
    }
    if (divisors[i].general_member && !is_nef(d)) {
      fail(name(i) + " is declared a general member of a class that is not base-point free");
    }
  }
  if (!report.passed) return report;

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (divisors[i].general_member || divisors[j].general_member) continue;
      for (std::size_t rho = 0; rho < divisors[i].divisor.surface().size(); ++rho) {
        if (divisors[i].divisor.coeffs()[rho] > 0 && divisors[j].divisor.coeffs()[rho] > 0) {
          fail(name(i) + " and " + name(j) + " share the component D_rho for ray " + std::to_string(rho));
        }
      }
    }
  }
  // Three distinct invariant curves never meet: a torus-fixed point lies on
  // exactly two of them. Only triples involving general members need care.
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t k = j + 1; k < r; ++k) {
        std::vector<std::size_t> general;
        for (std::size_t t : {i, j, k}) {
          if (divisors[t].general_member) general.push_back(t);
        }
        if (general.empty()) continue;
        std::ostringstream os;
        os << name(i) << " & " << name(j) << " & " << name(k)
           << ": empty by choosing general member " << name(general.back())
           << " off the finite intersection of the other two (assumed)";
        report.assumptions.push_back(os.str());
      }
    }
  }
  return report;
}

}  // namespace nucert
