#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nucert/rational.hpp"

namespace nucert {

// Symmetric matrix of intersection numbers <D_i . D_j> for divisors D_1..D_r
// on a projective surface. Construction only checks the shape; the geometric
// invariants are reported by validate_form().
class IntersectionForm {
 public:
  IntersectionForm() = default;
  explicit IntersectionForm(std::vector<std::vector<long long>> entries);

  std::size_t size() const { return entries_.size(); }
  long long operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<long long>>& entries() const { return entries_; }

  // Every entry multiplied by c.
  IntersectionForm scaled(long long c) const;

  friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;

 private:
  std::vector<std::vector<long long>> entries_;
};

struct FormViolation {
  enum class Kind { kAsymmetric, kNonPositive, kHodge };
  Kind kind;
  std::size_t i;
  std::size_t j;
  std::string message;
};

struct ValidationReport {
  std::vector<FormViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Necessary conditions only: symmetry, positive entries, and the pairwise
// Hodge inequality <D_i D_j>^2 >= <D_i^2><D_j^2>. Ampleness itself cannot be
// decided from the matrix.
ValidationReport validate_form(const IntersectionForm& form);

// Throws InputError carrying the report summary when validate_form fails.
void require_valid_form(const IntersectionForm& form);

// A point t of the standard simplex, standing for the R-divisor sum_j t_j D_j.
// Scalar is Rational (exact mode, sum exactly 1) or double (sum within 1e-12).
template <typename Scalar>
class DivisorWeights {
 public:
  explicit DivisorWeights(std::vector<Scalar> coords);

  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

 private:
  std::vector<Scalar> coords_;
};

using ExactWeights = DivisorWeights<Rational>;
using NumericWeights = DivisorWeights<double>;

inline constexpr double kSimplexSumTolerance = 1e-12;

template <typename Scalar>
struct PairingValues {
  std::vector<Scalar> lt_dot_di;  // <L_t . D_i>
  Scalar lt_squared;              // <L_t^2>
};

template <typename Scalar>
PairingValues<Scalar> pairing(const IntersectionForm& form, const DivisorWeights<Scalar>& t);

// The barycenter (1/r, ..., 1/r).
ExactWeights barycenter(std::size_t r);

}  // namespace nucert
