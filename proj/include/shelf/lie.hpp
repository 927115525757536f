// Finite-dimensional Lie algebras by structure constants.

#ifndef SHELF_LIE_HPP
#define SHELF_LIE_HPP

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shelf/linalg.hpp"

namespace shelf {

template <FieldScalar F>
class LieAlgebra {
 public:
  using Vec = DenseVector<F>;

  /// bracket[i][j] = [e_i, e_j] as a coordinate vector. Checks antisymmetry,
  /// the Jacobi identity and the characteristic.
  LieAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<std::vector<Vec>> bracket)
      : field_(field), labels_(std::move(labels)), c_(std::move(bracket)) {
    n_ = labels_.size();
    if (field_.characteristic() == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (c_.size() != n_) throw std::invalid_argument("structure constant table has the wrong size");
    for (const auto& row : c_) {
      if (row.size() != n_) throw std::invalid_argument("structure constant table has the wrong size");
      for (const auto& v : row)
        if (v.size() != n_) throw std::invalid_argument("structure constant table has the wrong size");
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (!(c_[i][j][k] + c_[j][i][k]).is_zero()) throw std::invalid_argument("bracket is not antisymmetric");
    if (!jacobi_holds()) throw std::invalid_argument("Jacobi identity fails");
  }

  std::size_t dim() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& bracket(std::size_t i, std::size_t j) const { return c_[i][j]; }
  F constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j].is_zero()) continue;
        F s = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k)
          if (!c_[i][j][k].is_zero()) out[k] = out[k] + s * c_[i][j][k];
      }
    }
    return out;
  }

  Vec basis(std::size_t i) const {
    Vec v(n_);
    v[i] = F::from_int(1, field_);
    return v;
  }

 private:
  bool jacobi_holds() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c) {
          auto x = basis(a), y = basis(b), z = basis(c);
          auto s1 = bracket(bracket(x, y), z), s2 = bracket(bracket(y, z), x), s3 = bracket(bracket(z, x), y);
          for (std::size_t k = 0; k < n_; ++k)
            if (!(s1[k] + s2[k] + s3[k]).is_zero()) return false;
        }
    return true;
  }

  FieldSpec field_;
  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  std::vector<std::vector<Vec>> c_;
};

struct LieConstant {
  std::size_t i, j, k;
  std::string coeff;
};

/// Builds from constants c_{ij}^k with i < j, extended antisymmetrically.
template <FieldScalar F>
LieAlgebra<F> make_lie(FieldSpec field, std::vector<std::string> labels, const std::vector<LieConstant>& constants) {
  std::size_t n = labels.size();
  std::vector<std::vector<DenseVector<F>>> c(n, std::vector<DenseVector<F>>(n, DenseVector<F>(n)));
  for (const auto& e : constants) {
    if (e.i >= e.j || e.j >= n || e.k >= n) throw std::invalid_argument("structure constants need i < j < n and k < n");
    F v = parse_scalar<F>(e.coeff, field);
    c[e.i][e.j][e.k] = c[e.i][e.j][e.k] + v;
    c[e.j][e.i][e.k] = c[e.j][e.i][e.k] - v;
  }
  return LieAlgebra<F>(field, std::move(labels), std::move(c));
}

template <FieldScalar F>
LieAlgebra<F> abelian_lie(FieldSpec field, std::size_t n) {
  return make_lie<F>(field, BasedSpace::numbered(n, field, "x").labels, {});
}

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
template <FieldScalar F>
LieAlgebra<F> sl2_type(FieldSpec field) {
  return make_lie<F>(field, {"h", "e", "f"}, {{0, 1, 1, "2"}, {0, 2, 2, "-2"}, {1, 2, 0, "1"}});
}

/// W_p: basis e_a for a in F_p, [e_a, e_b] = (b - a) e_{a+b}.
template <FieldScalar F>
LieAlgebra<F> witt(std::uint64_t p) {
  if (p <= 3) throw std::invalid_argument("the Witt algebra needs p > 3");
  FieldSpec field = FieldSpec::prime(p);
  std::vector<std::string> labels;
  std::vector<LieConstant> cs;
  for (std::size_t a = 0; a < p; ++a) {
    labels.push_back("e" + std::to_string(a));
    for (std::size_t b = a + 1; b < p; ++b) cs.push_back({a, b, (a + b) % p, std::to_string(b - a)});
  }
  return make_lie<F>(field, std::move(labels), cs);
}

// Lie file: "lie <n>" then lines "i j k coeff" for c_{ij}^k with i < j.
template <FieldScalar F>
LieAlgebra<F> read_lie(std::istream& is, FieldSpec field) {
  std::string line, kw;
  std::size_t n = 0;
  while (std::getline(is, line) && (detail::trim(line).empty() || detail::trim(line).starts_with("#"))) {}
  std::istringstream head(line);
  if (!(head >> kw >> n) || kw != "lie" || n == 0) throw std::invalid_argument("malformed lie header: " + line);
  std::vector<LieConstant> cs;
  while (std::getline(is, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.starts_with("#")) continue;
    std::istringstream ls{std::string(t)};
    LieConstant c{};
    if (!(ls >> c.i >> c.j >> c.k >> c.coeff)) throw std::invalid_argument("malformed structure constant line: " + line);
    cs.push_back(c);
  }
  return make_lie<F>(field, BasedSpace::numbered(n, field, "x").labels, cs);
}

}  // namespace shelf

#endif  // SHELF_LIE_HPP
