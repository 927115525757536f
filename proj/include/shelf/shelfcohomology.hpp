// Shelf cochains C^{n,i} = Hom(X^(n+1-i), X^i), the differentials d^{n,i},
// the restricted complex 0 → Z^{1,2} → C^{2,1} → C^{3,1} → C^{4,1} and its
// cohomology.
//
// Notation in the formulas below: τ₂ = 1⊗τ⊗1, M = (q⊗q)τ₂(1²⊗Δ), N = qM.
// Juxtaposition of elements means q, e.g. (ab)(cd) = q(q(a⊗b)⊗q(c⊗d)).

#ifndef SHELF_SHELFCOHOMOLOGY_HPP
#define SHELF_SHELFCOHOMOLOGY_HPP

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "shelf/linalg.hpp"
#include "shelf/shelfmap.hpp"

namespace shelf {

template <FieldScalar F>
struct Cochain {
  unsigned n = 0;  // total degree
  unsigned i = 0;  // column, 1 ≤ i ≤ n
  LinearMap<F> map;
};

template <FieldScalar F>
Cochain<F> make_cochain(unsigned n, unsigned i, LinearMap<F> m) {
  if (i < 1 || i > n) throw std::invalid_argument("cochain column out of range");
  if (m.domain_power() != n + 1 - i || m.codomain_power() != i)
    throw std::invalid_argument("shape mismatch: cochain does not live in C^{n,i}");
  return {n, i, std::move(m)};
}

template <FieldScalar F>
struct Degree3 {
  LinearMap<F> xi1, xi2, xi3;  // Hom(X³,X), Hom(X²,X²), Hom(X,X³)
};

template <FieldScalar F>
struct Degree4 {
  LinearMap<F> c1, c2, c3, c4;  // Hom(X⁴,X), Hom(X³,X²), Hom(X²,X³), Hom(X,X⁴)

  bool components_zero(int upto) const {
    const LinearMap<F>* cs[] = {&c1, &c2, &c3, &c4};
    for (int k = 0; k < upto; ++k)
      if (!cs[k]->is_zero()) return false;
    return true;
  }
};

/// Hom-space basis: E_{row,col} ↦ index row·dim^m + col.
template <FieldScalar F>
LinearMap<F> elementary_map(const std::shared_ptr<const BasedSpace>& sp, unsigned m, unsigned n, Index e) {
  Index cols = ipow(sp->dim, m);
  std::vector<SparseVector<F>> c(cols);
  c[e % cols] = {{e / cols, F::from_int(1, sp->field)}};
  return LinearMap<F>(sp, m, n, std::move(c));
}

template <FieldScalar F>
SparseVector<F> flatten(const LinearMap<F>& f) {
  SparseVector<F> out;
  Index cols = f.domain_dim();
  for (Index c = 0; c < cols; ++c)
    for (const auto& [r, v] : f.column(c)) out.emplace_back(r * cols + c, v);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

template <FieldScalar F>
LinearMap<F> unflatten(const DenseVector<F>& v, const std::shared_ptr<const BasedSpace>& sp, unsigned m, unsigned n) {
  Index cols = ipow(sp->dim, m);
  if (v.size() != cols * ipow(sp->dim, n)) throw std::invalid_argument("vector length does not match Hom space");
  MapBuilder<F> b(sp, m, n);
  for (Index e = 0; e < v.size(); ++e)
    if (!v[e].is_zero()) b.add(e % cols, e / cols, v[e]);
  return b.build();
}

template <FieldScalar F>
LinearMap<F> random_map(const std::shared_ptr<const BasedSpace>& sp, unsigned m, unsigned n, std::mt19937_64& rng,
                        int bound = 2) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  MapBuilder<F> b(sp, m, n);
  Index cols = ipow(sp->dim, m), rows = ipow(sp->dim, n);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) b.add(c, r, F::from_int(dist(rng), sp->field));
  return b.build();
}

/// All differentials for a fixed shelf (q, Δ).
template <FieldScalar F>
class ShelfDifferentials {
 public:
  using Map = LinearMap<F>;
  using C = Composite<F>;

  explicit ShelfDifferentials(const ShelfStructure<F>& s)
      : sp_(s.space_ptr()), q_(s.q), D_(s.delta()), cocommutative_(s.coalgebra.cocommutative()) {
    I_ = id(1);
    T_ = Map::transposition(sp_, 2, 1);
    M_ = C{{q_, q_}, {I_, T_, I_}, {id(2), D_}}.materialize();
    N_ = compose(q_, M_);
    SD_lhs_ = C{{q_}, {q_, I_}}.materialize();
  }

  const std::shared_ptr<const BasedSpace>& space_ptr() const { return sp_; }
  std::size_t dim() const { return sp_->dim; }
  const Map& q() const { return q_; }
  const Map& delta() const { return D_; }

  Map id(unsigned k) const { return Map::identity(sp_, k); }
  Map zero(unsigned m, unsigned n) const { return Map::zero(sp_, m, n); }
  Map perm(std::vector<unsigned> source) const { return Map::permutation(sp_, source); }

  // --- degree 1 -----------------------------------------------------------

  /// q(1⊗f) − fq + q(f⊗1)
  Map d11(const Map& f) const {
    return compose(q_, kron(I_, f)) - compose(f, q_) + compose(q_, kron(f, I_));
  }

  /// (1⊗f)Δ − Δf + (f⊗1)Δ
  Map d12(const Map& f) const {
    return compose(kron(I_, f), D_) - compose(D_, f) + compose(kron(f, I_), D_);
  }

  /// D₁ f as a 2-cochain pair (η₁, η₂) = (d^{1,1}f, −d^{1,2}f).
  std::pair<Map, Map> D1(const Map& f) const { return {d11(f), -d12(f)}; }

  // --- degree 2 -----------------------------------------------------------

  Map d21(const Map& e1, const Map& e2) const {
    auto I2 = id(2);
    Layer<F> t2{I_, T_, I_};
    Layer<F> dd{I2, D_};
    return C{{q_}, {e1, I_}}.materialize() + C{{e1}, {q_, I_}}.materialize() -
           C{{e1}, {q_, q_}, t2, dd}.materialize() - C{{q_}, {e1, q_}, t2, dd}.materialize() -
           C{{q_}, {q_, e1}, t2, dd}.materialize() - C{{q_}, {q_, q_}, t2, {I2, e2}}.materialize();
  }

  Map d22(const Map& e1, const Map& e2) const {
    Layer<F> t2{I_, T_, I_};
    return compose(D_, e1) + compose(e2, q_) - C{{e1, q_}, t2, {D_, D_}}.materialize() -
           C{{q_, e1}, t2, {D_, D_}}.materialize() - C{{q_, q_}, t2, {e2, D_}}.materialize() -
           C{{q_, q_}, t2, {D_, e2}}.materialize();
  }

  /// (η₂⊗1)Δ + (Δ⊗1)η₂ − (1⊗η₂)Δ − (1⊗Δ)η₂
  Map d23(const Map& e2) const {
    return compose(kron(e2, I_), D_) + compose(kron(D_, I_), e2) - compose(kron(I_, e2), D_) - compose(kron(I_, D_), e2);
  }

  Degree3<F> D2(const Map& e1, const Map& e2) const { return {d21(e1, e2), d22(e1, e2), d23(e2)}; }

  // --- degree 3 -----------------------------------------------------------

  /// a⊗b⊗c⊗d ↦ a⊗c₁⊗d₁⊗b⊗c₂⊗d₂
  Layer<F> spread_G_layer() const { return Layer<F>{perm({0, 2, 4, 1, 3, 5})}; }

  /// Target Hom(X⁴, X). With G: a⊗b⊗c⊗d ↦ a⊗c₁⊗d₁⊗b⊗c₂⊗d₂ and
  /// J: a⊗b⊗c⊗d ↦ a⊗d₁₁⊗b⊗d₁₂⊗c⊗d₂:
  ///   + q(ξ₁⊗1) + ξ₁(M⊗1) + q(ξ₁⊗q(q⊗1))G + q(N⊗ξ₁)G
  ///   − ξ₁(q⊗1²) − q(ξ₁⊗q)(1²⊗τ⊗1)(1³⊗Δ) − ξ₁(q⊗q⊗q)J − q(q⊗q)τ₂(q⊗q⊗ξ₂)J
  ///   + Y(1²⊗Δ⊗W(ξ₃))
  Map d31(const Degree3<F>& xi) const {
    auto I2 = id(2), I3 = id(3);
    const auto& x1 = xi.xi1;
    Layer<F> G = spread_G_layer();
    Layer<F> DD{id(2), D_, D_};
    // J: a⊗b⊗c⊗d ↦ a⊗d₁₁⊗b⊗d₁₂⊗c⊗d₂
    auto D3 = compose(kron(D_, I_), D_);
    Layer<F> J{perm({0, 3, 1, 4, 2, 5})};
    Layer<F> JD{I3, D3};

    Map out = C{{q_}, {x1, I_}}.materialize();
    out = out + C{{x1}, {M_, I_}}.materialize();
    out = out + C{{q_}, {x1, SD_lhs_}, G, DD}.materialize();
    out = out + C{{q_}, {N_, x1}, G, DD}.materialize();
    out = out - C{{x1}, {q_, I2}}.materialize();
    out = out - C{{q_}, {x1, q_}, {I2, T_, I_}, {I3, D_}}.materialize();
    out = out - C{{x1}, {q_, q_, q_}, J, JD}.materialize();
    if (!xi.xi2.is_zero())
      out = out - C{{q_}, {q_, q_}, {I_, T_, I_}, {q_, q_, xi.xi2}, J, JD}.materialize();
    if (!xi.xi3.is_zero()) {
      // Y(a,b,c₁,c₂; e₁..e₄) = ((a e₁)(c₁ e₂))((b e₃)(c₂ e₄)) applied to (1²⊗Δ⊗W(ξ₃))
      auto W = xi3_defect(xi.xi3);
      out = out + C{{q_}, {q_, q_}, {q_, q_, q_, q_}, {perm({0, 4, 2, 5, 1, 6, 3, 7})}, {I2, D_, W}}.materialize();
    }
    return out;
  }

  /// Target Hom(X³, X²). With G₂ = τ₂(1²⊗Δ), Q = (q⊗q)τ₂(Δ⊗Δ) and
  /// Π: a⊗b⊗c ↦ a₁⊗b₁⊗c₁⊗a₂⊗b₂⊗c₂:
  ///   + Δξ₁ + ξ₂M + (q⊗q)τ₂(ξ₂⊗Δq)G₂ + (q⊗q)τ₂(Q⊗ξ₂)G₂
  ///   − ξ₂(q⊗1) − (q⊗q)τ₂(ξ₂⊗Δ) − (ξ₁⊗q(q⊗1))Π − (N⊗ξ₁)Π − H(1²⊗W(ξ₃))
  Map d32(const Degree3<F>& xi) const {
    auto I2 = id(2);
    const auto& x1 = xi.xi1;
    const auto& x2 = xi.xi2;
    Layer<F> t2{I_, T_, I_};
    Layer<F> G2a{I_, T_, I_};
    Layer<F> G2b{I2, D_};
    auto Q = C{{q_, q_}, t2, {D_, D_}}.materialize();
    auto Dq = compose(D_, q_);
    // Π: a⊗b⊗c ↦ a₁⊗b₁⊗c₁⊗a₂⊗b₂⊗c₂
    Layer<F> Pi{perm({0, 2, 4, 1, 3, 5})};
    Layer<F> DDD{D_, D_, D_};

    Map out = compose(D_, x1);
    out = out - C{{x1, SD_lhs_}, Pi, DDD}.materialize();
    out = out - C{{N_, x1}, Pi, DDD}.materialize();
    if (!x2.is_zero()) {
      out = out + compose(x2, M_);
      out = out + C{{q_, q_}, t2, {x2, Dq}, G2a, G2b}.materialize();
      out = out + C{{q_, q_}, t2, {Q, x2}, G2a, G2b}.materialize();
      out = out - C{{x2}, {q_, I_}}.materialize();
      out = out - C{{q_, q_}, t2, {x2, D_}}.materialize();
    }
    if (!xi.xi3.is_zero()) {
      // H(a,b; e₁..e₄) = ((a₁e₁)(b₁e₂)) ⊗ ((a₂e₃)(b₂e₄)) applied to (1²⊗W(ξ₃))
      auto W = xi3_defect(xi.xi3);
      out = out - C{{q_, q_}, {q_, q_, q_, q_}, {perm({0, 4, 2, 5, 1, 6, 3, 7})}, {D_, D_, id(4)}, {I2, W}}.materialize();
    }
    return out;
  }

  /// Target Hom(X², X³). With P: x₁x₂x₃y₁y₂y₃ ↦ x₁y₁x₂y₂x₃y₃:
  ///   + (Δ⊗1)ξ₂ + (ξ₂⊗q)τ₂(Δ⊗Δ) + (q⊗q⊗q)P(ξ₃⊗(Δ⊗1)Δ + (1⊗Δ)Δ⊗ξ₃)
  ///   − ξ₃q − (1⊗Δ)ξ₂ − (q⊗ξ₂)τ₂(Δ⊗Δ)
  Map d33(const Degree3<F>& xi) const {
    const auto& x2 = xi.xi2;
    const auto& x3 = xi.xi3;
    Map out = zero(2, 3);
    Layer<F> t2{I_, T_, I_};
    if (!x2.is_zero()) {
      out = out + compose(kron(D_, I_), x2) + C{{x2, q_}, t2, {D_, D_}}.materialize();
      out = out - compose(kron(I_, D_), x2) - C{{q_, x2}, t2, {D_, D_}}.materialize();
    }
    if (!x3.is_zero()) {
      auto D3 = compose(kron(D_, I_), D_);
      auto D3p = compose(kron(I_, D_), D_);
      Layer<F> P3{perm({0, 3, 1, 4, 2, 5})};
      out = out + C{{q_, q_, q_}, P3, {x3, D3}}.materialize() + C{{q_, q_, q_}, P3, {D3p, x3}}.materialize();
      out = out - compose(x3, q_);
    }
    return out;
  }

  /// coHochschild differential of ξ₃: target Hom(X, X⁴).
  Map d34(const Degree3<F>& xi) const {
    const auto& x3 = xi.xi3;
    if (x3.is_zero()) return zero(1, 4);
    auto I2 = id(2);
    return compose(kron(I_, x3), D_) - compose(kron(D_, I2), x3) + compose(Map(kron({I_, D_, I_})), x3) -
           compose(kron(I2, D_), x3) + compose(kron(x3, I_), D_);
  }

  Degree4<F> D3(const Degree3<F>& xi) const {
    require_cocommutative();
    return {d31(xi), d32(xi), d33(xi), d34(xi)};
  }

  void require_cocommutative() const {
    if (!cocommutative_) throw std::invalid_argument("third differentials need a cocommutative coalgebra");
  }

 private:
  /// W(ξ₃) = (1 − 1⊗τ⊗1)[(1²⊗Δ)ξ₃ − (1⊗ξ₃)Δ]: X → X⁴
  Map xi3_defect(const Map& x3) const {
    auto inner = compose(kron(id(2), D_), x3) - compose(kron(I_, x3), D_);
    auto sigma = Map::transposition(sp_, 4, 2);
    return inner - compose(sigma, inner);
  }

  std::shared_ptr<const BasedSpace> sp_;
  Map q_, D_, I_, T_, M_, N_, SD_lhs_;
  bool cocommutative_ = false;
};

// ---------------------------------------------------------------------------
// Matrix assembly

/// Runs body(k) for k in [0, n) on a few threads; each k writes its own slot.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
  if (n < 8 || workers == 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < n; k += workers) body(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

template <FieldScalar F>
struct DifferentialMatrix {
  Index source_dim = 0;
  Index target_dim = 0;
  std::vector<SparseVector<F>> columns;  // one per source basis vector
};

/// Applies `op` to every vector of `source_basis` (maps X^m → X^n) and
/// flattens the results, each of which must map X^m' → X^n'.
template <FieldScalar F>
DifferentialMatrix<F> assemble_columns(const std::vector<LinearMap<F>>& source_basis, Index target_dim,
                                       const std::function<LinearMap<F>(const LinearMap<F>&)>& op) {
  DifferentialMatrix<F> m;
  m.source_dim = source_basis.size();
  m.target_dim = target_dim;
  m.columns.resize(source_basis.size());
  parallel_for(source_basis.size(), [&](std::size_t k) { m.columns[k] = flatten(op(source_basis[k])); });
  return m;
}

template <FieldScalar F>
std::vector<LinearMap<F>> hom_basis(const std::shared_ptr<const BasedSpace>& sp, unsigned m, unsigned n) {
  Index total = ipow(sp->dim, m) * ipow(sp->dim, n);
  std::vector<LinearMap<F>> out;
  out.reserve(total);
  for (Index e = 0; e < total; ++e) out.push_back(elementary_map<F>(sp, m, n, e));
  return out;
}

/// How the restricted complex treats the C^{3,2} component. Column keeps only
/// Hom(X^n, X) at every stage. Stacked carries d^{2,2}(η₁, 0) along, so that
/// D′₂: C^{2,1} → C^{3,1} ⊕ C^{3,2} and D′₃ = (d^{3,1}, d^{3,2}, d^{3,3})(ξ₁, ξ₂, 0).
enum class D2Target { Column, Stacked };

inline std::string variant_name(D2Target t) { return t == D2Target::Column ? "column" : "stacked"; }

template <FieldScalar F>
class RestrictedComplex {
 public:
  using Map = LinearMap<F>;

  explicit RestrictedComplex(const ShelfStructure<F>& s, D2Target target = D2Target::Stacked)
      : d_(s), target_(target) {
    d_.require_cocommutative();
  }

  const ShelfDifferentials<F>& differentials() const { return d_; }
  D2Target variant() const { return target_; }
  std::size_t dim() const { return d_.dim(); }
  Index hom_dim(unsigned m, unsigned n) const { return ipow(dim(), m) * ipow(dim(), n); }
  F one() const { return F::from_int(1, d_.space_ptr()->field); }

  /// Z^{1,2} = ker d^{1,2} as maps X → X.
  std::vector<Map> z12_basis() const {
    auto m = assemble_columns<F>(hom_basis<F>(d_.space_ptr(), 1, 1), hom_dim(1, 2), [&](const Map& f) { return d_.d12(f); });
    auto rk = rank_kernel_columns(m.columns, m.target_dim, one());
    std::vector<Map> out;
    for (const auto& v : rk.kernel_basis) out.push_back(unflatten(v, d_.space_ptr(), 1, 1));
    return out;
  }

  /// D′₁ = d^{1,1} on Z^{1,2}, columns indexed by z12_basis().
  DifferentialMatrix<F> D1_matrix() const {
    return assemble_columns<F>(z12_basis(), hom_dim(2, 1), [&](const Map& f) { return d_.d11(f); });
  }

  Index D2_source_dim() const { return hom_dim(2, 1); }
  Index D2_target_dim() const { return hom_dim(3, 1) + (stacked() ? hom_dim(2, 2) : 0); }
  Index D3_source_dim() const { return D2_target_dim(); }
  Index D3_target_dim() const { return hom_dim(4, 1) + (stacked() ? hom_dim(3, 2) + hom_dim(2, 3) : 0); }

  /// D′₂(η₁) as a vector of length D2_target_dim().
  SparseVector<F> D2_vector(const Map& e1) const {
    auto z = d_.zero(1, 2);
    if (!stacked()) return flatten(d_.d21(e1, z));
    return concat({flatten(d_.d21(e1, z)), flatten(d_.d22(e1, z))}, {hom_dim(3, 1)});
  }

  /// D′₃(ξ₁, ξ₂) as a vector of length D3_target_dim(); ξ₂ is ignored by Column.
  SparseVector<F> D3_vector(const Map& x1, const Map& x2) const {
    if (!stacked()) return flatten(d_.d31({x1, d_.zero(2, 2), d_.zero(1, 3)}));
    Degree3<F> xi{x1, x2, d_.zero(1, 3)};
    return concat({flatten(d_.d31(xi)), flatten(d_.d32(xi)), flatten(d_.d33(xi))}, {hom_dim(4, 1), hom_dim(3, 2)});
  }

  /// Embeds a cochain of C^{2,1} ⊕ C^{3,2}-shape into the D′₃ source.
  SparseVector<F> degree3_vector(const Map& x1, const Map& x2) const {
    if (!stacked()) return flatten(x1);
    return concat({flatten(x1), flatten(x2)}, {hom_dim(3, 1)});
  }

  DifferentialMatrix<F> D2_matrix() const {
    auto basis = hom_basis<F>(d_.space_ptr(), 2, 1);
    DifferentialMatrix<F> m{basis.size(), D2_target_dim(), {}};
    m.columns.resize(basis.size());
    parallel_for(basis.size(), [&](std::size_t k) { m.columns[k] = D2_vector(basis[k]); });
    return m;
  }

  DifferentialMatrix<F> D3_matrix() const {
    auto b1 = hom_basis<F>(d_.space_ptr(), 3, 1);
    std::vector<Map> b2;
    if (stacked()) b2 = hom_basis<F>(d_.space_ptr(), 2, 2);
    DifferentialMatrix<F> m{b1.size() + b2.size(), D3_target_dim(), {}};
    m.columns.resize(m.source_dim);
    auto z1 = d_.zero(3, 1), z2 = d_.zero(2, 2);
    parallel_for(m.source_dim, [&](std::size_t k) {
      m.columns[k] = k < b1.size() ? D3_vector(b1[k], z2) : D3_vector(z1, b2[k - b1.size()]);
    });
    return m;
  }

 private:
  bool stacked() const { return target_ == D2Target::Stacked; }

  static SparseVector<F> concat(std::vector<SparseVector<F>> parts, std::vector<Index> sizes) {
    SparseVector<F> out = std::move(parts[0]);
    Index off = 0;
    for (std::size_t k = 1; k < parts.size(); ++k) {
      off += sizes[k - 1];
      for (auto& [i, x] : parts[k]) out.emplace_back(i + off, std::move(x));
    }
    return out;
  }

  ShelfDifferentials<F> d_;
  D2Target target_;
};

/// Product B·A of matrices given by sparse columns.
template <FieldScalar F>
std::vector<SparseVector<F>> multiply(const DifferentialMatrix<F>& B, const DifferentialMatrix<F>& A) {
  if (A.target_dim != B.source_dim) throw std::invalid_argument("shape mismatch in matrix product");
  std::vector<SparseVector<F>> out(A.columns.size());
  for (std::size_t c = 0; c < A.columns.size(); ++c) {
    SparseAccumulator<F> acc;
    for (const auto& [r, x] : A.columns[c]) acc.add(B.columns[r], x);
    out[c] = acc.take();
  }
  return out;
}

struct CohomologyDims {
  std::size_t z = 0, b = 0, h = 0;
};

/// dim Z^{j,1} = nullity of D′_j, dim B^{j,1} = rank of D′_{j−1}.
template <FieldScalar F>
CohomologyDims cohomology_dim(const RestrictedComplex<F>& cx, int j) {
  CohomologyDims d;
  if (j == 2) {
    auto d2 = cx.D2_matrix();
    d.z = d2.source_dim - rank_of_columns(d2.columns, d2.target_dim);
    auto d1 = cx.D1_matrix();
    d.b = rank_of_columns(d1.columns, d1.target_dim);
  } else if (j == 3) {
    auto d3 = cx.D3_matrix();
    d.z = d3.source_dim - rank_of_columns(d3.columns, d3.target_dim);
    auto d2 = cx.D2_matrix();
    d.b = rank_of_columns(d2.columns, d2.target_dim);
  } else {
    throw std::invalid_argument("cohomology is implemented for j = 2, 3");
  }
  if (d.b > d.z) throw std::logic_error("coboundaries exceed cocycles; the sequence is not a complex");
  d.h = d.z - d.b;
  return d;
}

/// Membership of a (j,1)-cochain in Image(D′_{j−1}). Degree 2 requires
/// d^{2,1}(c, 0) = 0; degree 3 requires d^{3,1}(c, 0, 0) = 0. The image of
/// D′₁ does not depend on the variant.
template <FieldScalar F>
bool is_coboundary(const Cochain<F>& c, const RestrictedComplex<F>& cx) {
  if (c.i != 1) throw std::invalid_argument("only C^{j,1} cochains are supported");
  const auto& d = cx.differentials();
  if (c.n == 2) {
    if (!d.d21(c.map, d.zero(1, 2)).is_zero()) throw std::invalid_argument("cochain is not a cocycle");
    auto d1 = cx.D1_matrix();
    Subspace<F> s(d1.target_dim);
    for (const auto& col : d1.columns) s.insert(col);
    return s.contains(flatten(c.map));
  }
  if (c.n == 3) {
    if (!d.d31({c.map, d.zero(2, 2), d.zero(1, 3)}).is_zero()) throw std::invalid_argument("cochain is not a cocycle");
    auto d2 = cx.D2_matrix();
    Subspace<F> s(d2.target_dim);
    for (const auto& col : d2.columns) s.insert(col);
    return s.contains(cx.degree3_vector(c.map, d.zero(2, 2)));
  }
  throw std::invalid_argument("is_coboundary is implemented for degrees 2 and 3");
}

struct ProbeTrial {
  bool eta2_zero = false;
  bool eta2_symmetric = false;
  std::array<bool, 4> vanishes{};  // components of D₃D₂(η₁, η₂)
};

struct ProbeReport {
  std::vector<ProbeTrial> trials;
};

/// Computes D₃(D₂(η₁, η₂)) on random inputs; cycles through η₂ = 0, η₂ with
/// τη₂ = η₂, and unconstrained η₂. Records which components vanish.
template <FieldScalar F>
ProbeReport probe_full_complex(const ShelfStructure<F>& s, int trials, std::uint64_t seed) {
  ShelfDifferentials<F> d(s);
  d.require_cocommutative();
  std::mt19937_64 rng(seed);
  const auto& sp = d.space_ptr();
  auto T = LinearMap<F>::transposition(sp, 2, 1);
  ProbeReport rep;
  for (int t = 0; t < trials; ++t) {
    ProbeTrial tr;
    auto e1 = random_map<F>(sp, 2, 1, rng);
    auto e2 = d.zero(1, 2);
    int kind = t % 3;
    if (kind == 1) {
      auto r = random_map<F>(sp, 1, 2, rng);
      e2 = r + compose(T, r);
    } else if (kind == 2) {
      e2 = random_map<F>(sp, 1, 2, rng);
    }
    tr.eta2_zero = e2.is_zero();
    tr.eta2_symmetric = compose(T, e2) == e2;
    auto out = d.D3(d.D2(e1, e2));
    tr.vanishes = {out.c1.is_zero(), out.c2.is_zero(), out.c3.is_zero(), out.c4.is_zero()};
    rep.trials.push_back(tr);
  }
  return rep;
}

}  // namespace shelf

#endif  // SHELF_SHELFCOHOMOLOGY_HPP
