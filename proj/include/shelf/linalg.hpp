// Exact Gaussian elimination: rank, kernel, image, span membership.

#ifndef SHELF_LINALG_HPP
#define SHELF_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "shelf/tensorspace.hpp"

namespace shelf {

template <FieldScalar F>
using DenseVector = std::vector<F>;

template <FieldScalar F>
DenseVector<F> to_dense(const SparseVector<F>& v, std::size_t n) {
  DenseVector<F> out(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

template <FieldScalar F>
SparseVector<F> to_sparse(const DenseVector<F>& v) {
  SparseVector<F> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

template <FieldScalar F>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<DenseVector<F>> kernel_basis;
  std::vector<DenseVector<F>> image_basis;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <FieldScalar F>
std::vector<std::size_t> row_reduce(std::vector<DenseVector<F>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    F inv = rows[r][c].inverse();
    for (std::size_t k = c; k < ncols; ++k)
      if (!rows[r][k].is_zero()) rows[r][k] = rows[r][k] * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      F f = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!rows[r][k].is_zero()) rows[i][k] = rows[i][k] - f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Rank, kernel basis and image basis of a matrix given by its columns.
template <FieldScalar F>
RankKernel<F> rank_kernel_columns(const std::vector<SparseVector<F>>& columns, std::size_t nrows, const F& one) {
  std::size_t ncols = columns.size();
  std::vector<DenseVector<F>> rows(nrows, DenseVector<F>(ncols));
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [r, x] : columns[c]) rows[r][c] = x;
  auto pivots = row_reduce(rows, ncols);

  RankKernel<F> out;
  out.rank = pivots.size();
  for (auto c : pivots) out.image_basis.push_back(to_dense(columns[c], nrows));
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    DenseVector<F> v(ncols);
    v[free] = one;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

template <FieldScalar F>
RankKernel<F> rank_kernel(const LinearMap<F>& m) {
  return rank_kernel_columns(m.columns(), m.codomain_dim(), F::from_int(1, m.space().field));
}

/// Incrementally built span in echelon form; answers membership exactly.
template <FieldScalar F>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : n_(ambient_dim) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const SparseVector<F>& v) { return insert(to_dense(v, n_)); }
  bool insert(DenseVector<F> v) {
    check(v);
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    F inv = v[p].inverse();
    for (std::size_t k = p; k < n_; ++k)
      if (!v[k].is_zero()) v[k] = v[k] * inv;
    rows_.emplace(p, std::move(v));
    return true;
  }

  bool contains(const SparseVector<F>& v) const { return contains(to_dense(v, n_)); }
  bool contains(DenseVector<F> v) const {
    check(v);
    reduce(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  void check(const DenseVector<F>& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match the ambient dimension");
  }

  void reduce(DenseVector<F>& v) const {
    for (const auto& [p, row] : rows_) {
      if (v[p].is_zero()) continue;
      F f = v[p];
      for (std::size_t k = p; k < n_; ++k)
        if (!row[k].is_zero()) v[k] = v[k] - f * row[k];
    }
  }

  std::size_t n_;
  std::map<std::size_t, DenseVector<F>> rows_;
};

template <FieldScalar F>
bool subspace_membership(const DenseVector<F>& v, const std::vector<DenseVector<F>>& basis) {
  Subspace<F> s(v.size());
  for (const auto& b : basis) s.insert(b);
  return s.contains(v);
}

template <FieldScalar F>
std::size_t rank_of_columns(const std::vector<SparseVector<F>>& columns, std::size_t nrows) {
  Subspace<F> s(nrows);
  for (const auto& c : columns) s.insert(c);
  return s.dim();
}

}  // namespace shelf

#endif  // SHELF_LINALG_HPP
