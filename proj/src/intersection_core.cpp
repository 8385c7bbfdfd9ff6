#include "nucert/intersection_core.hpp"

#include <cmath>
#include <sstream>

#include "nucert/errors.hpp"

namespace nucert {

IntersectionForm::IntersectionForm(std::vector<std::vector<long long>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("intersection form must have at least one row");
  for (const auto& row : entries_) {
    if (row.size() != entries_.size()) {
      throw InputError("intersection form must be square");
    }
  }
}

IntersectionForm IntersectionForm::scaled(long long c) const {
  auto out = entries_;
  for (auto& row : out) {
    for (auto& e : row) e *= c;
  }
  return IntersectionForm(std::move(out));
}

std::string ValidationReport::summary() const {
  if (ok()) return "form passes all checks";
  std::ostringstream os;
  for (std::size_t n = 0; n < violations.size(); ++n) {
    if (n) os << "; ";
    os << violations[n].message;
  }
  return os.str();
}

ValidationReport validate_form(const IntersectionForm& form) {
  ValidationReport report;
  const std::size_t r = form.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const long long e = form(i, j);
      // Indices in messages are 1-based, like D_1..D_r.
      const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (j > i && e != form(j, i)) {
        report.violations.push_back({FormViolation::Kind::kAsymmetric, i, j,
                                     "asymmetry at " + at + ": " + std::to_string(e) +
                                         " != " + std::to_string(form(j, i))});
      }
      if (e < 1) {
        report.violations.push_back({FormViolation::Kind::kNonPositive, i, j,
                                     "nonpositive entry at " + at + ": " + std::to_string(e)});
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (form(i, i) < 1 || form(j, j) < 1 || form(i, j) < 1) continue;
      const BigInt off = BigInt(static_cast<long>(form(i, j)));
      const BigInt prod = BigInt(static_cast<long>(form(i, i))) * static_cast<long>(form(j, j));
      if (off * off < prod) {
        std::ostringstream os;
        os << "Hodge violation at (" << i + 1 << "," << j + 1 << "): " << form(i, j)
           << "^2 < " << form(i, i) << "*" << form(j, j);
        report.violations.push_back({FormViolation::Kind::kHodge, i, j, os.str()});
      }
    }
  }
  return report;
}

void require_valid_form(const IntersectionForm& form) {
  auto report = validate_form(form);
  if (!report.ok()) throw InputError("invalid intersection form: " + report.summary());
}

namespace {

void check_simplex(std::vector<Rational>& coords) {
  Rational sum = 0;
  for (auto& c : coords) {
    c.canonicalize();
    if (sgn(c) < 0) throw InputError("simplex coordinate is negative");
    sum += c;
  }
  if (sum != 1) throw InputError("simplex coordinates sum to " + to_fraction_string(sum) + ", not 1");
}

void check_simplex(std::vector<double>& coords) {
  double sum = 0;
  for (double c : coords) {
    if (!(c >= 0.0)) throw InputError("simplex coordinate is negative or NaN");
    sum += c;
  }
  if (std::abs(sum - 1.0) > kSimplexSumTolerance) {
    throw InputError("simplex coordinates do not sum to 1");
  }
}

}  // namespace

template <typename Scalar>
DivisorWeights<Scalar>::DivisorWeights(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("divisor weights must be nonempty");
  check_simplex(coords_);
}

template <typename Scalar>
PairingValues<Scalar> pairing(const IntersectionForm& form, const DivisorWeights<Scalar>& t) {
  const std::size_t r = form.size();
  if (t.size() != r) {
    throw InputError("weight vector has " + std::to_string(t.size()) + " coordinates, form has " +
                     std::to_string(r));
  }
  PairingValues<Scalar> out{std::vector<Scalar>(r, Scalar(0)), Scalar(0)};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      out.lt_dot_di[i] += t[j] * Scalar(static_cast<long>(form(i, j)));
    }
    out.lt_squared += t[i] * out.lt_dot_di[i];
  }
  return out;
}

ExactWeights barycenter(std::size_t r) {
  return ExactWeights(std::vector<Rational>(r, make_rational(1, static_cast<long long>(r))));
}

template class DivisorWeights<Rational>;
template class DivisorWeights<double>;
template PairingValues<Rational> pairing(const IntersectionForm&, const DivisorWeights<Rational>&);
template PairingValues<double> pairing(const IntersectionForm&, const DivisorWeights<double>&);

}  // namespace nucert
