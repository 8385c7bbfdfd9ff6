#include "nucert/multiplicity_solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nucert/errors.hpp"
#include "nucert/nu_bounds.hpp"

namespace nucert {

namespace {

template <typename Scalar>
std::vector<Scalar> positive_pairings(const IntersectionForm& form, const DivisorWeights<Scalar>& t) {
  auto values = pairing(form, t).lt_dot_di;
  for (const auto& v : values) {
    if (!(v > 0)) throw InputError("<L_t . D_i> is not positive; the form is not ample-like");
  }
  return values;
}

}  // namespace

template <typename Scalar>
Scalar phi(const IntersectionForm& form, const DivisorWeights<Scalar>& t) {
  Scalar inv_sum = 0;
  for (const auto& v : positive_pairings(form, t)) inv_sum += Scalar(1) / v;
  return Scalar(1) / inv_sum;
}

template <typename Scalar>
DivisorWeights<Scalar> fixed_point_map(const IntersectionForm& form, const DivisorWeights<Scalar>& t) {
  auto values = positive_pairings(form, t);
  Scalar inv_sum = 0;
  for (auto& v : values) {
    v = Scalar(1) / v;
    inv_sum += v;
  }
  for (auto& v : values) v /= inv_sum;
  return DivisorWeights<Scalar>(std::move(values));
}

template DivisorWeights<Rational> fixed_point_map(const IntersectionForm&, const DivisorWeights<Rational>&);
template DivisorWeights<double> fixed_point_map(const IntersectionForm&, const DivisorWeights<double>&);
template Rational phi(const IntersectionForm&, const DivisorWeights<Rational>&);
template double phi(const IntersectionForm&, const DivisorWeights<double>&);

namespace {

Eigen::MatrixXd to_matrix(const IntersectionForm& form) {
  const auto r = static_cast<Eigen::Index>(form.size());
  Eigen::MatrixXd g(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) g(i, j) = static_cast<double>(form(i, j));
  }
  return g;
}

double residual_of(const Eigen::MatrixXd& g, const Eigen::VectorXd& x) {
  const Eigen::VectorXd gx = g * x;
  double inv_sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) inv_sum += 1.0 / gx(i);
  const double p = 1.0 / inv_sum;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x(i) * gx(i) - p));
  return worst;
}

// F(x) = (x_i(Gx)_i - x_last(Gx)_last for i < last, sum x - 1).
Eigen::VectorXd balance_system(const Eigen::MatrixXd& g, const Eigen::VectorXd& x) {
  const Eigen::Index r = x.size();
  const Eigen::VectorXd gx = g * x;
  Eigen::VectorXd f(r);
  for (Eigen::Index i = 0; i + 1 < r; ++i) f(i) = x(i) * gx(i) - x(r - 1) * gx(r - 1);
  f(r - 1) = x.sum() - 1.0;
  return f;
}

Eigen::MatrixXd balance_jacobian(const Eigen::MatrixXd& g, const Eigen::VectorXd& x) {
  const Eigen::Index r = x.size();
  const Eigen::VectorXd gx = g * x;
  Eigen::MatrixXd jac(r, r);
  for (Eigen::Index i = 0; i + 1 < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) {
      double d = x(i) * g(i, j) - x(r - 1) * g(r - 1, j);
      if (j == i) d += gx(i);
      if (j == r - 1) d -= gx(r - 1);
      jac(i, j) = d;
    }
  }
  jac.row(r - 1).setOnes();
  return jac;
}

}  // namespace

double fixed_point_residual(const IntersectionForm& form, const std::vector<double>& x) {
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  return residual_of(to_matrix(form), v);
}

FixedPointResult solve_fixed_point(const IntersectionForm& form, const SolverOptions& options) {
  require_valid_form(form);
  if (!(options.tolerance > 0)) throw InputError("tolerance must be positive");
  if (options.max_iter < 2) throw InputError("max_iter must be at least 2");

  const Eigen::MatrixXd g = to_matrix(form);
  const auto r = static_cast<Eigen::Index>(form.size());
  Eigen::VectorXd x = Eigen::VectorXd::Constant(r, 1.0 / static_cast<double>(r));
  Eigen::VectorXd best = x;
  double best_residual = residual_of(g, x);

  FixedPointResult result;
  auto finish = [&](const Eigen::VectorXd& v, double res) {
    result.x.assign(v.data(), v.data() + v.size());
    result.residual = res;
    result.phi = phi(form, NumericWeights(result.x));
    return result;
  };

  const long long damped_budget = options.max_iter / 2;
  double res = best_residual;
  for (long long it = 0; it < damped_budget && res > options.tolerance; ++it) {
    const Eigen::VectorXd inv = (g * x).cwiseInverse();
    x = 0.5 * x + 0.5 * inv / inv.sum();
    x /= x.sum();
    res = residual_of(g, x);
    ++result.iterations;
    if (res < best_residual) {
      best_residual = res;
      best = x;
    }
  }
  if (best_residual <= options.tolerance) return finish(best, best_residual);

  result.used_root_solve = true;
  x = best;
  for (long long it = 0; it < options.max_iter - damped_budget; ++it) {
    ++result.iterations;
    const Eigen::VectorXd f = balance_system(g, x);
    const Eigen::VectorXd step = balance_jacobian(g, x).fullPivLu().solve(-f);
    if (!step.allFinite()) break;
    // Backtrack until the iterate stays in the open simplex and F shrinks.
    double scale = 1.0;
    Eigen::VectorXd next = x + step;
    while (scale > 1e-12 && ((next.array() <= 0.0).any() || balance_system(g, next).norm() >= f.norm())) {
      scale *= 0.5;
      next = x + scale * step;
    }
    if (scale <= 1e-12) break;
    x = next / next.sum();
    res = residual_of(g, x);
    if (res < best_residual) {
      best_residual = res;
      best = x;
    }
    if (best_residual <= options.tolerance) return finish(best, best_residual);
  }
  throw SolverError("fixed-point solve did not reach tolerance; best residual " + std::to_string(best_residual),
                    best_residual);
}

Rational strict_margin(const IntersectionForm& form, const ExactWeights& t, std::size_t i) {
  const auto pv = pairing(form, t);
  if (i >= form.size()) throw InputError("divisor index out of range");
  const Rational& l_sq = pv.lt_squared;
  const Rational& l_d = pv.lt_dot_di[i];
  if (sgn(l_d) <= 0) throw InputError("<L_t . D_i> is not positive");
  const Rational d_sq = make_rational(form(i, i));
  const Rational r = make_rational(static_cast<long long>(form.size()));
  return l_sq / l_d + l_sq * l_sq * d_sq / (6 * l_d * l_d * l_d) - t[i] * r;
}

std::vector<long long> apportion(const std::vector<double>& x, long long m) {
  const std::size_t r = x.size();
  if (r == 0 || m < static_cast<long long>(r)) throw InputError("apportionment needs m >= r >= 1");
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  std::vector<long long> out(r);
  std::vector<double> remainder(r);
  long long assigned = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const double quota = static_cast<double>(m) * x[i] / total;
    out[i] = static_cast<long long>(std::floor(quota));
    remainder[i] = quota - static_cast<double>(out[i]);
    assigned += out[i];
  }
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (long long k = 0; assigned + k < m; ++k) ++out[order[static_cast<std::size_t>(k) % r]];
  for (long long k = 0; assigned - k > m; ++k) --out[order[r - 1 - static_cast<std::size_t>(k) % r]];

  for (std::size_t i = 0; i < r; ++i) {
    if (out[i] > 0) continue;
    const auto donor = static_cast<std::size_t>(std::max_element(out.begin(), out.end()) - out.begin());
    --out[donor];
    out[i] = 1;
  }
  return out;
}

std::vector<Rational> NuCertificate::margins() const {
  std::vector<Rational> out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

namespace {

ExactWeights weights_of(const std::vector<long long>& m, long long denominator) {
  std::vector<Rational> y;
  y.reserve(m.size());
  for (long long mi : m) y.push_back(make_rational(mi, denominator));
  return ExactWeights(std::move(y));
}

bool all_margins_positive(const IntersectionForm& form, const ExactWeights& y) {
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (sgn(strict_margin(form, y, i)) <= 0) return false;
  }
  return true;
}

}  // namespace

NuCertificate certificate_for(const IntersectionForm& form, std::vector<long long> m) {
  if (m.size() != form.size()) throw InputError("multiplicity count does not match the form");
  for (long long mi : m) {
    if (mi < 1) throw InputError("multiplicities must be >= 1");
  }
  const long long den = std::accumulate(m.begin(), m.end(), 0LL);
  const auto y = weights_of(m, den);
  const auto pv = pairing(form, y);
  const Rational r = make_rational(static_cast<long long>(form.size()));
  NuCertificate cert;
  cert.denominator = den;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const Rational& l_d = pv.lt_dot_di[i];
    const Rational d_sq = make_rational(form(i, i));
    cert.lhs.push_back(pv.lt_squared / l_d +
                       pv.lt_squared * pv.lt_squared * d_sq / (6 * l_d * l_d * l_d));
    cert.rhs.push_back(r * y[i]);
  }
  cert.m = std::move(m);
  return cert;
}

NuCertificate rationalize(const IntersectionForm& form, const FixedPointResult& fixed_point,
                          long long denominator_cap) {
  require_valid_form(form);
  const auto r = static_cast<long long>(form.size());
  if (fixed_point.x.size() != form.size()) throw InputError("fixed point has the wrong dimension");
  if (denominator_cap < r) throw InputError("denominator cap must be at least r");

  for (long long den = r; den <= denominator_cap; ++den) {
    auto m = apportion(fixed_point.x, den);
    if (!all_margins_positive(form, weights_of(m, den))) continue;
    long long g = den;
    for (long long mi : m) g = std::gcd(g, mi);
    for (auto& mi : m) mi /= g;
    auto cert = certificate_for(form, std::move(m));
    cert.residual = fixed_point.residual;
    return cert;
  }
  throw CertificationError("no denominator up to " + std::to_string(denominator_cap) +
                           " gives strictly positive margins; raise the cap");
}

CertificateCheck verify_certificate(const IntersectionForm& form, const std::vector<long long>& m,
                                    long long denominator) {
  CertificateCheck check;
  auto report = validate_form(form);
  if (!report.ok()) check.problems.push_back("invalid form: " + report.summary());
  if (m.size() != form.size()) check.problems.push_back("multiplicity count does not match the form");
  if (!check.problems.empty()) return check;

  long long sum = 0, g = denominator;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1) check.problems.push_back("m_" + std::to_string(i + 1) + " < 1");
    sum += m[i];
    g = std::gcd(g, m[i]);
  }
  if (sum != denominator) {
    check.problems.push_back("multiplicities sum to " + std::to_string(sum) + ", denominator is " +
                             std::to_string(denominator));
  }
  if (!check.problems.empty()) return check;
  if (g != 1) check.problems.push_back("certificate is not gcd-reduced");

  const auto y = weights_of(m, denominator);
  for (std::size_t i = 0; i < form.size(); ++i) {
    check.margins.push_back(strict_margin(form, y, i));
    if (sgn(check.margins.back()) <= 0) {
      check.problems.push_back("margin " + std::to_string(i + 1) + " is " +
                               to_fraction_string(check.margins.back()) + ", not positive");
    }
  }
  check.valid = check.problems.empty();
  return check;
}

std::vector<Rational> integral_nu_bounds(const IntersectionForm& form, const std::vector<long long>& m) {
  if (m.size() != form.size()) throw InputError("multiplicity count does not match the form");
  const std::size_t r = form.size();
  std::vector<Rational> l_dot_d(r, Rational(0));
  Rational l_sq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) l_dot_d[i] += make_rational(form(i, j) * m[j]);
    l_sq += make_rational(m[i]) * l_dot_d[i];
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(nu_lower_bound(l_sq, l_dot_d[i], make_rational(form(i, i))));
  return out;
}

}  // namespace nucert
