// Quandle cochains with coefficients in the ground field, their cocycle
// conditions and cohomology, and the lifts to shelf cochains on W = k ⊕ kX.

#ifndef SHELF_QUANDLECOH_HPP
#define SHELF_QUANDLECOH_HPP

#include <stdexcept>
#include <vector>

#include "shelf/linalg.hpp"
#include "shelf/rack.hpp"
#include "shelf/shelfcohomology.hpp"

namespace shelf {

/// Function X^degree → k, stored row-major: values[x·n + y] or values[(x·n + y)·n + z].
template <FieldScalar F>
struct QuandleCochain {
  int degree = 2;
  std::vector<F> values;

  F operator()(std::size_t n, std::size_t x, std::size_t y) const { return values[x * n + y]; }
  F operator()(std::size_t n, std::size_t x, std::size_t y, std::size_t z) const { return values[(x * n + y) * n + z]; }
};

namespace detail {

inline std::size_t tuple_index(std::size_t n, std::initializer_list<std::size_t> xs) {
  std::size_t i = 0;
  for (auto x : xs) i = i * n + x;
  return i;
}

inline bool degenerate(const std::vector<std::size_t>& t) {
  for (std::size_t k = 0; k + 1 < t.size(); ++k)
    if (t[k] == t[k + 1]) return true;
  return false;
}

}  // namespace detail

/// Coboundary δ: C^m → C^{m+1}, m = 1, 2, 3, as a sparse column per source tuple.
///   δg(x,y)       = g(x) − g(x◁y)
///   δφ(x,y,z)     = φ(x,y) + φ(x◁y,z) − φ(x,z) − φ(x◁z,y◁z)
///   δθ(x,y,z,w)   = θ(x,y,z) + θ(x◁z,y◁z,w) + θ(x,z,w) − θ(x◁y,z,w) − θ(x,y,w) − θ(x◁w,y◁w,z◁w)
/// The returned matrix maps function values to function values.
template <FieldScalar F>
std::vector<SparseVector<F>> quandle_coboundary_matrix(const FiniteRack& r, int m, const FieldSpec& field) {
  std::size_t n = r.n;
  auto op = [&](std::size_t a, std::size_t b) { return r.op(a, b); };
  std::size_t src = ipow(n, m), tgt = ipow(n, m + 1);
  std::vector<SparseAccumulator<F>> acc(src);
  F one = F::from_int(1, field), mone = -one;
  for (std::size_t t = 0; t < tgt; ++t) {
    auto v = decode_index(t, n, m + 1);
    auto put = [&](std::initializer_list<std::size_t> xs, const F& s) { acc[detail::tuple_index(n, xs)].add(t, s); };
    if (m == 1) {
      put({v[0]}, one);
      put({op(v[0], v[1])}, mone);
    } else if (m == 2) {
      auto [x, y, z] = std::tuple{v[0], v[1], v[2]};
      put({x, y}, one);
      put({op(x, y), z}, one);
      put({x, z}, mone);
      put({op(x, z), op(y, z)}, mone);
    } else if (m == 3) {
      auto [x, y, z, w] = std::tuple{v[0], v[1], v[2], v[3]};
      put({x, y, z}, one);
      put({op(x, z), op(y, z), w}, one);
      put({x, z, w}, one);
      put({op(x, y), z, w}, mone);
      put({x, y, w}, mone);
      put({op(x, w), op(y, w), op(z, w)}, mone);
    } else {
      throw std::invalid_argument("quandle coboundary implemented for degrees 1 to 3");
    }
  }
  std::vector<SparseVector<F>> cols(src);
  for (std::size_t s = 0; s < src; ++s) cols[s] = acc[s].take();
  return cols;
}

/// Tuples allowed as cochain coordinates: all for racks, nondegenerate ones
/// (no equal neighbours) for quandles.
inline std::vector<std::size_t> cochain_support(const FiniteRack& r, int m) {
  std::vector<std::size_t> out;
  std::size_t total = ipow(r.n, m);
  for (std::size_t t = 0; t < total; ++t)
    if (!r.quandle || m == 1 || !detail::degenerate(decode_index(t, r.n, m))) out.push_back(t);
  return out;
}

template <FieldScalar F>
bool quandle_cocycle_check(const QuandleCochain<F>& c, const FiniteRack& r, const FieldSpec& field) {
  if (c.values.size() != ipow(r.n, c.degree)) throw std::invalid_argument("cochain size does not match the rack");
  if (r.quandle)
    for (std::size_t t = 0; t < c.values.size(); ++t)
      if (detail::degenerate(decode_index(t, r.n, c.degree)) && !c.values[t].is_zero()) return false;
  auto delta = quandle_coboundary_matrix<F>(r, c.degree, field);
  SparseAccumulator<F> acc;
  for (std::size_t s = 0; s < delta.size(); ++s) acc.add(delta[s], c.values[s]);
  return acc.take().empty();
}

struct QuandleCohomology {
  std::size_t z = 0, b = 0, h = 0;
};

template <FieldScalar F>
QuandleCohomology quandle_cohomology_dim(const FiniteRack& r, int degree, const FieldSpec& field) {
  if (degree < 2 || degree > 3) throw std::invalid_argument("quandle cohomology implemented for degrees 2 and 3");
  auto dn = quandle_coboundary_matrix<F>(r, degree, field);
  auto dprev = quandle_coboundary_matrix<F>(r, degree - 1, field);
  std::vector<SparseVector<F>> zcols, bcols;
  for (auto t : cochain_support(r, degree)) zcols.push_back(dn[t]);
  for (auto t : cochain_support(r, degree - 1)) bcols.push_back(dprev[t]);
  QuandleCohomology d;
  d.z = zcols.size() - rank_of_columns(zcols, ipow(r.n, degree + 1));
  d.b = rank_of_columns(bcols, ipow(r.n, degree));
  d.h = d.z - d.b;
  return d;
}

/// Basis of the cocycle space and the coboundary span, both as full value tables.
template <FieldScalar F>
struct QuandleCocycles {
  std::vector<QuandleCochain<F>> cocycles;
  Subspace<F> coboundaries{0};
};

template <FieldScalar F>
QuandleCocycles<F> quandle_cocycles(const FiniteRack& r, int degree, const FieldSpec& field) {
  auto dn = quandle_coboundary_matrix<F>(r, degree, field);
  auto support = cochain_support(r, degree);
  std::vector<SparseVector<F>> cols;
  for (auto t : support) cols.push_back(dn[t]);
  auto rk = rank_kernel_columns(cols, ipow(r.n, degree + 1), F::from_int(1, field));
  QuandleCocycles<F> out;
  for (const auto& v : rk.kernel_basis) {
    QuandleCochain<F> c{degree, std::vector<F>(ipow(r.n, degree), F::from_int(0, field))};
    for (std::size_t k = 0; k < support.size(); ++k) c.values[support[k]] = v[k];
    out.cocycles.push_back(std::move(c));
  }
  auto dprev = quandle_coboundary_matrix<F>(r, degree - 1, field);
  out.coboundaries = Subspace<F>(ipow(r.n, degree));
  for (auto t : cochain_support(r, degree - 1)) out.coboundaries.insert(dprev[t]);
  return out;
}

template <FieldScalar F>
bool is_quandle_coboundary(const QuandleCochain<F>& c, const FiniteRack& r, const FieldSpec& field) {
  auto dprev = quandle_coboundary_matrix<F>(r, c.degree - 1, field);
  Subspace<F> s(ipow(r.n, c.degree));
  for (auto t : cochain_support(r, c.degree - 1)) s.insert(dprev[t]);
  return s.contains(DenseVector<F>(c.values));
}

/// φ̂(x⊗y) = φ(x,y)·1, φ̂(1⊗x) = 1, φ̂(x⊗1) = φ̂(1⊗1) = 0.
template <FieldScalar F>
LinearMap<F> lift_2cocycle(const QuandleCochain<F>& phi, const FiniteRack& r, const std::shared_ptr<const BasedSpace>& W) {
  if (phi.degree != 2 || phi.values.size() != r.n * r.n) throw std::invalid_argument("expected a quandle 2-cochain");
  if (!quandle_cocycle_check(phi, r, W->field)) throw std::invalid_argument("φ is not a quandle 2-cocycle");
  F one = F::from_int(1, W->field);
  MapBuilder<F> b(W, 2, 1);
  for (std::size_t x = 0; x < r.n; ++x) {
    b.add({0, x + 1}, {0}, one);
    for (std::size_t y = 0; y < r.n; ++y) b.add({x + 1, y + 1}, {0}, phi(r.n, x, y));
  }
  return b.build("phi_hat");
}

/// θ̂(x⊗y⊗z) = θ(x,y,z)·1, θ̂(1⊗y⊗z) = 1, every other unit-sector value 0.
template <FieldScalar F>
LinearMap<F> lift_3cocycle(const QuandleCochain<F>& theta, const FiniteRack& r, const std::shared_ptr<const BasedSpace>& W) {
  if (theta.degree != 3 || theta.values.size() != r.n * r.n * r.n) throw std::invalid_argument("expected a quandle 3-cochain");
  if (!quandle_cocycle_check(theta, r, W->field)) throw std::invalid_argument("θ is not a quandle 3-cocycle");
  F one = F::from_int(1, W->field);
  MapBuilder<F> b(W, 3, 1);
  for (std::size_t y = 0; y < r.n; ++y)
    for (std::size_t z = 0; z < r.n; ++z) {
      b.add({0, y + 1, z + 1}, {0}, one);
      for (std::size_t x = 0; x < r.n; ++x) b.add({x + 1, y + 1, z + 1}, {0}, theta(r.n, x, y, z));
    }
  return b.build("theta_hat");
}

/// First cocycle in the basis that is not a coboundary, if any.
template <FieldScalar F>
std::optional<QuandleCochain<F>> nontrivial_cocycle(const FiniteRack& r, int degree, const FieldSpec& field) {
  auto cs = quandle_cocycles<F>(r, degree, field);
  for (const auto& c : cs.cocycles)
    if (!cs.coboundaries.contains(DenseVector<F>(c.values))) return c;
  return std::nullopt;
}

}  // namespace shelf

#endif  // SHELF_QUANDLECOH_HPP
