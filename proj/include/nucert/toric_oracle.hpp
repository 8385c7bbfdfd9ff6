#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "nucert/intersection_core.hpp"
#include "nucert/rational.hpp"

namespace nucert {

struct Ray {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Ray&, const Ray&) = default;
};

using LatticePoint = std::array<long long, 2>;

// Smooth complete toric surface given by its fan: primitive rays in
// counterclockwise order, consecutive pairs forming lattice bases
// (det(v_i, v_{i+1}) = +1), winding once around the origin.
class ToricSurface {
 public:
  explicit ToricSurface(std::vector<Ray> rays);

  static ToricSurface projective_plane();
  static ToricSurface p1xp1();
  // Rays (1,0), (0,1), (-1,e), (0,-1). Ray 0 is a fiber, ray 1 the
  // (-e)-section, ray 3 the (+e)-section. F_0 is P1 x P1.
  static ToricSurface hirzebruch(long long e);

  std::size_t size() const { return rays_.size(); }
  const Ray& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<Ray>& rays() const { return rays_; }

  // D_i . D_j for torus-invariant prime divisors: 1 if adjacent, 0 if
  // disjoint, and -s for i = j where v_{i-1} + v_{i+1} = s v_i.
  long long prime_pairing(std::size_t i, std::size_t j) const;

  friend bool operator==(const ToricSurface& a, const ToricSurface& b) { return a.rays_ == b.rays_; }

 private:
  std::vector<Ray> rays_;
  std::vector<long long> self_intersections_;
};

// D = sum_rho a_rho D_rho.
class ToricDivisor {
 public:
  ToricDivisor(ToricSurface surface, std::vector<long long> coeffs);

  const ToricSurface& surface() const { return surface_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  // Torus-invariant prime divisor D_rho.
  static ToricDivisor prime(const ToricSurface& surface, std::size_t rho);

  ToricDivisor operator+(const ToricDivisor& other) const;
  ToricDivisor operator-(const ToricDivisor& other) const;
  ToricDivisor operator*(long long c) const;

  bool has_nonnegative_coeffs() const;

 private:
  ToricSurface surface_;
  std::vector<long long> coeffs_;
};

inline ToricDivisor operator*(long long c, const ToricDivisor& d) { return d * c; }

// Catalog classes. degree d on P^2 is d times the line of ray 2 (z = 0).
ToricDivisor line_class(const ToricSurface& p2, long long degree);
// O(a,b) = a * fiber + b * (+e)-section on F_e; on P1 x P1 this is the usual
// bidegree with O(a,b).O(c,d) = ad + bc.
ToricDivisor bidegree_class(const ToricSurface& hirzebruch, long long a, long long b);

struct HalfPlane {
  Ray normal;        // v_rho
  long long offset;  // a_rho; the half-plane is <u, v_rho> >= -a_rho
};

struct RationalPoint {
  Rational x;
  Rational y;
};

// Section polygon {u : <u, v_rho> >= -a_rho for all rho}.
struct DivisorPolygon {
  std::vector<HalfPlane> half_planes;
  std::vector<RationalPoint> vertices;  // sorted, deduplicated; empty if the polygon is empty

  bool empty() const { return vertices.empty(); }
  bool contains(const LatticePoint& u) const;
};

DivisorPolygon divisor_polygon(const ToricDivisor& d);

// Lattice points of the section polygon, ordered by (y, x). These index a
// monomial basis of the global sections.
std::vector<LatticePoint> lattice_points(const ToricDivisor& d);

// dim H^0(X, O(D)), counted row by row over the section polygon.
long long h0(const ToricDivisor& d);

long long intersection_number(const ToricDivisor& d, const ToricDivisor& e);

// D . D_rho > 0 for every ray.
bool is_ample(const ToricDivisor& d);
// D . D_rho >= 0 for every ray (base-point free on a toric surface).
bool is_nef(const ToricDivisor& d);

// Requires a common surface and ample divisors; throws InputError otherwise.
IntersectionForm intersection_form_of(const std::vector<ToricDivisor>& divisors);

// h^0(P^1, O(d)).
long long curve_h0(long long degree);

// Divisor together with how its support is known.
struct SupportedDivisor {
  ToricDivisor divisor;
  // false: support is the union of the rays with positive coefficient.
  // true: a general member of the (base-point free) class of divisor.
  bool general_member = false;
};

struct ProperIntersectionReport {
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> assumptions;
};

// Pairwise intersections finite and triple intersections empty.
// Invariant supports are checked combinatorially; statements involving
// general members rest on a Bertini-type assumption and are listed in
// `assumptions`.
ProperIntersectionReport proper_intersection_check(const std::vector<SupportedDivisor>& divisors);

}  // namespace nucert
