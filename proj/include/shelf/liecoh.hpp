// Lie algebra cochains with adjoint or trivial coefficients, their
// Chevalley–Eilenberg coboundaries, the Virasoro cocycle on W_p, the central
// extension g′ = kγ ⊕ g, and the lifts ψ̂, ζ̂ to shelf cochains on N = k ⊕ g.

#ifndef SHELF_LIECOH_HPP
#define SHELF_LIECOH_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shelf/lie.hpp"
#include "shelf/linalg.hpp"
#include "shelf/shelfcohomology.hpp"

namespace shelf {

enum class Coefficients { Adjoint, Trivial };

namespace detail {

/// Strictly increasing m-tuples from {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, int m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(m);
  auto rec = [&](auto&& self, int pos, std::size_t start) -> void {
    if (pos == m) {
      out.push_back(t);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      t[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Sorts t in place and returns the sign of the sorting permutation, or 0 if
/// an index repeats.
inline int sort_with_sign(std::vector<std::size_t>& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace detail

/// Totally skew m-linear map g^m → g (adjoint) or g^m → k (trivial), stored
/// by its values on increasing basis tuples.
template <FieldScalar F>
class LieCochain {
 public:
  LieCochain(std::size_t n, int degree, Coefficients coeff, FieldSpec field)
      : n_(n), degree_(degree), coeff_(coeff), field_(field) {
    if (degree < 1 || degree > 4) throw std::invalid_argument("Lie cochain degree must be between 1 and 4");
    tuples_ = detail::increasing_tuples(n, degree);
    values_.assign(tuples_.size(), DenseVector<F>(out_dim(), F::from_int(0, field)));
    index_.assign(ipow(n, degree), npos);
    for (std::size_t k = 0; k < tuples_.size(); ++k) index_[code(tuples_[k])] = k;
  }

  std::size_t n() const { return n_; }
  int degree() const { return degree_; }
  Coefficients coefficients() const { return coeff_; }
  const FieldSpec& field() const { return field_; }
  std::size_t out_dim() const { return coeff_ == Coefficients::Adjoint ? n_ : 1; }
  const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }
  std::size_t free_dim() const { return tuples_.size() * out_dim(); }

  /// Value on an arbitrary basis tuple, extended by skew-symmetry.
  DenseVector<F> at(std::vector<std::size_t> t) const {
    int s = detail::sort_with_sign(t);
    DenseVector<F> out(out_dim(), F::from_int(0, field_));
    if (s == 0) return out;
    out = values_[index_[code(t)]];
    if (s < 0)
      for (auto& x : out) x = -x;
    return out;
  }

  /// Sets the value on t (any order without repeats); the sign is adjusted.
  void set(std::vector<std::size_t> t, DenseVector<F> v) {
    if (v.size() != out_dim()) throw std::invalid_argument("value has the wrong dimension");
    int s = detail::sort_with_sign(t);
    if (s == 0) throw std::invalid_argument("skew cochain cannot take a value on a repeated index");
    if (s < 0)
      for (auto& x : v) x = -x;
    values_[index_[code(t)]] = std::move(v);
  }

  /// Coordinates (tuple-major, then output component).
  DenseVector<F> flat() const {
    DenseVector<F> out;
    out.reserve(free_dim());
    for (const auto& v : values_) out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  static LieCochain from_flat(std::size_t n, int degree, Coefficients coeff, FieldSpec field, const DenseVector<F>& v) {
    LieCochain c(n, degree, coeff, field);
    if (v.size() != c.free_dim()) throw std::invalid_argument("coordinate vector has the wrong length");
    std::size_t d = c.out_dim();
    for (std::size_t k = 0; k < c.tuples_.size(); ++k)
      for (std::size_t r = 0; r < d; ++r) c.values_[k][r] = v[k * d + r];
    return c;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const LieCochain& o) const {
    return n_ == o.n_ && degree_ == o.degree_ && coeff_ == o.coeff_ && values_ == o.values_;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t code(const std::vector<std::size_t>& t) const {
    std::size_t c = 0;
    for (auto x : t) c = c * n_ + x;
    return c;
  }

  std::size_t n_;
  int degree_;
  Coefficients coeff_;
  FieldSpec field_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::vector<DenseVector<F>> values_;
  std::vector<std::size_t> index_;
};

/// Chevalley–Eilenberg coboundary
///   dc(x₀..x_m) = Σᵢ (−1)^i xᵢ·c(..x̂ᵢ..) + Σ_{i<j} (−1)^{i+j} c([xᵢ,xⱼ], ..x̂ᵢ..x̂ⱼ..)
/// with xᵢ·v = [xᵢ, v] for adjoint coefficients and 0 for trivial ones.
/// In degree 1 this is dg(x,y) = [x,g(y)] + [g(x),y] − g([x,y]).
template <FieldScalar F>
LieCochain<F> lie_coboundary(const LieAlgebra<F>& g, const LieCochain<F>& c) {
  if (c.n() != g.dim()) throw std::invalid_argument("cochain does not match the Lie algebra");
  int m = c.degree();
  LieCochain<F> out(g.dim(), m + 1, c.coefficients(), g.field());
  bool adjoint = c.coefficients() == Coefficients::Adjoint;
  std::size_t od = c.out_dim();
  for (const auto& t : out.tuples()) {
    DenseVector<F> acc(od, F::from_int(0, g.field()));
    auto add = [&](const DenseVector<F>& v, const F& s) {
      for (std::size_t r = 0; r < od; ++r)
        if (!v[r].is_zero()) acc[r] = acc[r] + s * v[r];
    };
    F one = F::from_int(1, g.field());
    for (int i = 0; i <= m; ++i) {
      F sign = i % 2 == 0 ? one : -one;
      std::vector<std::size_t> rest;
      for (int k = 0; k <= m; ++k)
        if (k != i) rest.push_back(t[k]);
      if (adjoint) add(g.bracket(g.basis(t[i]), c.at(rest)), sign);
    }
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        F sign = (i + j) % 2 == 0 ? one : -one;
        const auto& br = g.bracket(t[i], t[j]);
        std::vector<std::size_t> args{0};
        for (int k = 0; k <= m; ++k)
          if (k != i && k != j) args.push_back(t[k]);
        for (std::size_t b = 0; b < g.dim(); ++b) {
          if (br[b].is_zero()) continue;
          args[0] = b;
          add(c.at(args), sign * br[b]);
        }
      }
    out.set(t, std::move(acc));
  }
  return out;
}

template <FieldScalar F>
bool lie_cocycle_check(const LieCochain<F>& c, const LieAlgebra<F>& g) {
  return lie_coboundary(g, c).is_zero();
}

/// Degree-3 adjoint condition summed exactly as the ten-term display
///   [ζ(x,y,z),w] − [ζ(x,y,w),z] + [ζ(x,z,w),y] − [ζ(y,z,w),x]
///   − ζ([x,y],z,w) + ζ([x,z],y,w) − ζ([x,w],y,z) + s·(ζ([y,z],x,w) − ζ([y,w],x,z) + ζ([z,w],x,y))
/// with s = −1 (the Chevalley–Eilenberg sign) or s = +1.
template <FieldScalar F>
bool degree3_display_holds(const LieCochain<F>& z, const LieAlgebra<F>& g, int last_sign) {
  if (z.degree() != 3 || z.coefficients() != Coefficients::Adjoint) throw std::invalid_argument("expected an adjoint 3-cochain");
  std::size_t n = g.dim();
  F one = F::from_int(1, g.field());
  F s = last_sign < 0 ? -one : one;
  auto zb = [&](std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
    DenseVector<F> out(n, F::from_int(0, g.field()));
    const auto& br = g.bracket(i, j);
    for (std::size_t k = 0; k < n; ++k)
      if (!br[k].is_zero()) {
        auto v = z.at({k, a, b});
        for (std::size_t r = 0; r < n; ++r) out[r] = out[r] + br[k] * v[r];
      }
    return out;
  };
  auto act = [&](const DenseVector<F>& v, std::size_t w) { return g.bracket(v, g.basis(w)); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t zz = 0; zz < n; ++zz)
        for (std::size_t w = 0; w < n; ++w) {
          std::vector<std::pair<DenseVector<F>, F>> terms{
              {act(z.at({x, y, zz}), w), one},   {act(z.at({x, y, w}), zz), -one}, {act(z.at({x, zz, w}), y), one},
              {act(z.at({y, zz, w}), x), -one},  {zb(x, y, zz, w), -one},          {zb(x, zz, y, w), one},
              {zb(x, w, y, zz), -one},           {zb(y, zz, x, w), s},             {zb(y, w, x, zz), -s},
              {zb(zz, w, x, y), s}};
          for (std::size_t r = 0; r < n; ++r) {
            F acc = F::from_int(0, g.field());
            for (const auto& [v, c] : terms) acc = acc + c * v[r];
            if (!acc.is_zero()) return false;
          }
        }
  return true;
}

struct LieCohomology {
  std::size_t z = 0, b = 0, h = 0;
};

/// Basis of the cocycle space and the span of coboundaries in degree m.
template <FieldScalar F>
struct LieCocycles {
  std::vector<LieCochain<F>> cocycles;
  Subspace<F> coboundaries{0};
};

namespace detail {

template <FieldScalar F>
std::vector<SparseVector<F>> coboundary_columns(const LieAlgebra<F>& g, int degree, Coefficients coeff) {
  LieCochain<F> probe(g.dim(), degree, coeff, g.field());
  std::size_t d = probe.free_dim();
  std::vector<SparseVector<F>> cols(d);
  F one = F::from_int(1, g.field());
  parallel_for(d, [&](std::size_t e) {
    DenseVector<F> v(d, F::from_int(0, g.field()));
    v[e] = one;
    auto c = LieCochain<F>::from_flat(g.dim(), degree, coeff, g.field(), v);
    cols[e] = to_sparse(lie_coboundary(g, c).flat());
  });
  return cols;
}

}  // namespace detail

template <FieldScalar F>
LieCocycles<F> lie_cocycles(const LieAlgebra<F>& g, int degree, Coefficients coeff) {
  if (degree < 2 || degree > 3) throw std::invalid_argument("Lie cocycle spaces implemented for degrees 2 and 3");
  auto cols = detail::coboundary_columns(g, degree, coeff);
  LieCochain<F> next(g.dim(), degree + 1, coeff, g.field());
  auto rk = rank_kernel_columns(cols, next.free_dim(), F::from_int(1, g.field()));
  LieCocycles<F> out;
  for (const auto& v : rk.kernel_basis)
    out.cocycles.push_back(LieCochain<F>::from_flat(g.dim(), degree, coeff, g.field(), v));
  LieCochain<F> here(g.dim(), degree, coeff, g.field());
  out.coboundaries = Subspace<F>(here.free_dim());
  for (const auto& col : detail::coboundary_columns(g, degree - 1, coeff)) out.coboundaries.insert(col);
  return out;
}

template <FieldScalar F>
LieCohomology lie_cohomology_dim(const LieAlgebra<F>& g, int degree, Coefficients coeff) {
  auto cs = lie_cocycles(g, degree, coeff);
  LieCohomology d{cs.cocycles.size(), cs.coboundaries.dim(), 0};
  if (d.b > d.z) throw std::logic_error("Lie coboundaries exceed cocycles");
  d.h = d.z - d.b;
  return d;
}

template <FieldScalar F>
bool is_lie_coboundary(const LieCochain<F>& c, const LieAlgebra<F>& g) {
  Subspace<F> s(c.free_dim());
  for (const auto& col : detail::coboundary_columns(g, c.degree() - 1, c.coefficients())) s.insert(col);
  return s.contains(c.flat());
}

/// Adjoint 2-coboundary of a linear map g: g → g given by its matrix columns.
template <FieldScalar F>
LieCochain<F> lie_coboundary_of_map(const LieAlgebra<F>& g, const std::vector<DenseVector<F>>& columns) {
  LieCochain<F> f(g.dim(), 1, Coefficients::Adjoint, g.field());
  for (std::size_t i = 0; i < g.dim(); ++i) f.set({i}, columns.at(i));
  return lie_coboundary(g, f);
}

/// c(e_a, e_{−a}) = a(a² − 1) on W_p, all other basis pairs 0.
template <FieldScalar F>
LieCochain<F> virasoro_cocycle(std::uint64_t p) {
  if (p <= 3) throw std::invalid_argument("the Virasoro cocycle needs p > 3");
  FieldSpec field = FieldSpec::prime(p);
  LieCochain<F> c(p, 2, Coefficients::Trivial, field);
  for (std::uint64_t a = 1; a < p; ++a) {
    std::uint64_t b = p - a;
    if (a >= b) continue;
    auto v = static_cast<std::int64_t>(a) * (static_cast<std::int64_t>(a * a) - 1);
    c.set({a, b}, {F::from_int(v, field)});
  }
  return c;
}

template <FieldScalar F>
struct CentralExtension {
  LieAlgebra<F> algebra;   // basis γ, then the basis of g
  LieCochain<F> psi;       // ψ′(aγ + x, bγ + y) = ψ(x, y)γ
};

/// g′ = kγ ⊕ g with γ central and [x, y]′ = [x, y]; ψ′ = ψγ.
template <FieldScalar F>
CentralExtension<F> central_extend(const LieAlgebra<F>& g, const LieCochain<F>& psi) {
  if (psi.degree() != 2 || psi.coefficients() != Coefficients::Trivial || psi.n() != g.dim())
    throw std::invalid_argument("expected a trivial-coefficient 2-cochain on g");
  if (!lie_cocycle_check(psi, g)) throw std::invalid_argument("ψ is not a 2-cocycle with trivial coefficients");
  std::size_t n = g.dim() + 1;
  std::vector<std::string> labels{"gamma"};
  for (const auto& l : g.labels()) labels.push_back(l);
  std::vector<std::vector<DenseVector<F>>> c(n, std::vector<DenseVector<F>>(n, DenseVector<F>(n, F::from_int(0, g.field()))));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) c[i + 1][j + 1][k + 1] = g.constant(i, j, k);
  LieAlgebra<F> ext(g.field(), std::move(labels), std::move(c));
  LieCochain<F> out(n, 2, Coefficients::Adjoint, g.field());
  for (const auto& t : psi.tuples()) {
    DenseVector<F> v(n, F::from_int(0, g.field()));
    v[0] = psi.at(t)[0];
    out.set({t[0] + 1, t[1] + 1}, std::move(v));
  }
  return {std::move(ext), std::move(out)};
}

namespace detail {

/// ĉ((a₁+x₁)⊗…⊗(a_m+x_m)) = c(x₁, …, x_m) on N = k ⊕ g, unit at index 0.
template <FieldScalar F>
LinearMap<F> lift_adjoint(const LieCochain<F>& c, const LieAlgebra<F>& g, const std::shared_ptr<const BasedSpace>& N,
                          const char* name) {
  if (c.coefficients() != Coefficients::Adjoint || c.n() != g.dim()) throw std::invalid_argument("expected an adjoint cochain on g");
  if (N->dim != g.dim() + 1) throw std::invalid_argument("N must be k ⊕ g");
  unsigned m = static_cast<unsigned>(c.degree());
  MapBuilder<F> b(N, m, 1);
  for (Index t = 0; t < ipow(g.dim(), m); ++t) {
    auto digits = decode_index(t, g.dim(), m);
    auto v = c.at(digits);
    std::vector<std::size_t> in(digits.begin(), digits.end());
    for (auto& x : in) ++x;
    for (std::size_t r = 0; r < g.dim(); ++r)
      if (!v[r].is_zero()) b.add(in, {r + 1}, v[r]);
  }
  return b.build(name);
}

}  // namespace detail

template <FieldScalar F>
LinearMap<F> lift_psi_hat(const LieCochain<F>& psi, const LieAlgebra<F>& g, const std::shared_ptr<const BasedSpace>& N) {
  if (psi.degree() != 2) throw std::invalid_argument("expected a 2-cochain");
  if (!lie_cocycle_check(psi, g)) throw std::invalid_argument("ψ is not an adjoint 2-cocycle");
  return detail::lift_adjoint(psi, g, N, "psi_hat");
}

template <FieldScalar F>
LinearMap<F> lift_zeta_hat(const LieCochain<F>& zeta, const LieAlgebra<F>& g, const std::shared_ptr<const BasedSpace>& N) {
  if (zeta.degree() != 3) throw std::invalid_argument("expected a 3-cochain");
  if (!lie_cocycle_check(zeta, g)) throw std::invalid_argument("ζ is not an adjoint 3-cocycle");
  return detail::lift_adjoint(zeta, g, N, "zeta_hat");
}

/// First basis cocycle that is not a coboundary, if any.
template <FieldScalar F>
std::optional<LieCochain<F>> nontrivial_lie_cocycle(const LieAlgebra<F>& g, int degree, Coefficients coeff) {
  auto cs = lie_cocycles(g, degree, coeff);
  for (const auto& c : cs.cocycles)
    if (!cs.coboundaries.contains(c.flat())) return c;
  return std::nullopt;
}

}  // namespace shelf

#endif  // SHELF_LIECOH_HPP
