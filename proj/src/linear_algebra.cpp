#include "nucert/linear_algebra.hpp"

#include "nucert/errors.hpp"

namespace nucert {

namespace {

// In-place reduced row echelon form; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(std::vector<RVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational inv = 1 / rows[lead][col];
    for (auto& e : rows[lead]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || sgn(rows[i][col]) == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t c = 0; c < ncols; ++c) rows[i][c] -= factor * rows[lead][c];
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

void check_lengths(const std::vector<RVector>& rows, std::size_t n) {
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("vector length does not match the ambient dimension");
  }
}

}  // namespace

std::size_t rank_of(std::vector<RVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  check_lengths(rows, n);
  return rref(rows, n).size();
}

std::vector<RVector> null_space(const std::vector<RVector>& rows, std::size_t ncols) {
  check_lengths(rows, ncols);
  auto reduced = rows;
  const auto pivots = rref(reduced, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RVector> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RVector v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RVector>& vectors) {
  check_lengths(vectors, ambient_dim);
  Subspace s(ambient_dim);
  s.basis_ = vectors;
  rref(s.basis_, ambient_dim);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<RVector> e(ambient_dim, RVector(ambient_dim, Rational(0)));
  for (std::size_t i = 0; i < ambient_dim; ++i) e[i][i] = 1;
  return span(ambient_dim, e);
}

bool Subspace::contains(const RVector& v) const {
  auto rows = basis_;
  rows.push_back(v);
  return rank_of(std::move(rows)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return (*this + other).dim() == dim(); }

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw InputError("subspaces of different ambient spaces");
  auto rows = a.basis_;
  rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw InputError("subspaces of different ambient spaces");
  const std::size_t n = a.ambient_, da = a.dim(), db = b.dim();
  // Solve sum_i c_i a_i - sum_j d_j b_j = 0, one equation per coordinate.
  std::vector<RVector> eqs(n, RVector(da + db, Rational(0)));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < da; ++i) eqs[c][i] = a.basis_[i][c];
    for (std::size_t j = 0; j < db; ++j) eqs[c][da + j] = -b.basis_[j][c];
  }
  std::vector<RVector> vectors;
  for (const auto& coeffs : null_space(eqs, da + db)) {
    RVector v(n, Rational(0));
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t c = 0; c < n; ++c) v[c] += coeffs[i] * a.basis_[i][c];
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

}  // namespace nucert
