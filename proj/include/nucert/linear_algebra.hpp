#pragma once

#include <cstddef>
#include <vector>

#include "nucert/rational.hpp"

namespace nucert {

using RVector = std::vector<Rational>;

// Rank of the row set, by exact Gaussian elimination.
std::size_t rank_of(std::vector<RVector> rows);

// Basis of {x : A x = 0} for A given by rows, each of length ncols.
std::vector<RVector> null_space(const std::vector<RVector>& rows, std::size_t ncols);

// A subspace of Q^n stored by its reduced row echelon basis, so equal
// subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<RVector>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RVector>& basis() const { return basis_; }

  bool contains(const RVector& v) const;
  bool contains(const Subspace& other) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<RVector> basis_;
};

}  // namespace nucert
