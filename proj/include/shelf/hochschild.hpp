// Hochschild and coHochschild differentials of a bialgebra up to total degree
// 3, the total differential D, and deformations over k[t]/(t^m) for bialgebras
// and for shelves in coalgebras.

#ifndef SHELF_HOCHSCHILD_HPP
#define SHELF_HOCHSCHILD_HPP

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "shelf/coalgebra.hpp"
#include "shelf/shelfcohomology.hpp"

namespace shelf {

template <FieldScalar F>
struct Bialgebra {
  LinearMap<F> mu, delta;

  const std::shared_ptr<const BasedSpace>& space_ptr() const { return mu.space_ptr(); }

  static Bialgebra from_hopf(const HopfData<F>& h) { return {h.mu(), h.delta()}; }
};

/// Element of Hom(V^p, V^q), total degree p + q − 1.
template <FieldScalar F>
struct BialgebraCochain {
  LinearMap<F> map;

  unsigned p() const { return map.domain_power(); }
  unsigned q() const { return map.codomain_power(); }
  unsigned degree() const { return p() + q() - 1; }
};

namespace detail {

template <FieldScalar F>
struct BialgebraOps {
  const Bialgebra<F>& b;
  LinearMap<F> I, m, D;

  explicit BialgebraOps(const Bialgebra<F>& bi)
      : b(bi), I(LinearMap<F>::identity(bi.space_ptr(), 1)), m(bi.mu), D(bi.delta) {}

  LinearMap<F> id(unsigned k) const { return LinearMap<F>::identity(b.space_ptr(), k); }
  LinearMap<F> perm(std::vector<unsigned> s) const { return LinearMap<F>::permutation(b.space_ptr(), std::move(s)); }
  Layer<F> t2() const { return Layer<F>{I, LinearMap<F>::transposition(b.space_ptr(), 2, 1), I}; }
};

}  // namespace detail

/// Hochschild differential on Hom(V^p, V^q) for p + q ≤ 4:
///   (1,1) μ(1⊗f) − fμ + μ(f⊗1)
///   (2,1) μ(1⊗φ) − φ(μ⊗1) + φ(1⊗μ) − μ(φ⊗1)
///   (1,2) (μ⊗μ)τ₂(Δ⊗φ) − φμ + (μ⊗μ)τ₂(φ⊗Δ)
///   (3,1) μ(1⊗ψ) − ψ(μ⊗1²) + ψ(1⊗μ⊗1) − ψ(1²⊗μ) + μ(ψ⊗1)
///   (2,2) (μ⊗μ)τ₂(Δ⊗ψ) − ψ(μ⊗1) + ψ(1⊗μ) − (μ⊗μ)τ₂(ψ⊗Δ)
///   (1,3) (μ⊗μ⊗μ)P((1⊗Δ)Δ⊗ψ) − ψμ + (μ⊗μ⊗μ)P(ψ⊗(Δ⊗1)Δ),  P: x₁x₂x₃y₁y₂y₃ ↦ x₁y₁x₂y₂x₃y₃
template <FieldScalar F>
LinearMap<F> hochschild_d(const LinearMap<F>& f, const Bialgebra<F>& b) {
  detail::BialgebraOps<F> o(b);
  using C = Composite<F>;
  const auto &I = o.I, &m = o.m, &D = o.D;
  unsigned p = f.domain_power(), q = f.codomain_power();
  if (p == 1 && q == 1) return compose(m, kron(I, f)) - compose(f, m) + compose(m, kron(f, I));
  if (p == 2 && q == 1)
    return compose(m, kron(I, f)) - compose(f, kron(m, I)) + compose(f, kron(I, m)) - compose(m, kron(f, I));
  if (p == 1 && q == 2)
    return C{{m, m}, o.t2(), {D, f}}.materialize() - compose(f, m) + C{{m, m}, o.t2(), {f, D}}.materialize();
  if (p == 3 && q == 1) {
    auto I2 = o.id(2);
    return compose(m, kron(I, f)) - compose(f, kron(m, I2)) + compose(f, kron({I, m, I})) - compose(f, kron(I2, m)) +
           compose(m, kron(f, I));
  }
  if (p == 2 && q == 2)
    return C{{m, m}, o.t2(), {D, f}}.materialize() - compose(f, kron(m, I)) + compose(f, kron(I, m)) -
           C{{m, m}, o.t2(), {f, D}}.materialize();
  if (p == 1 && q == 3) {
    auto P = o.perm({0, 3, 1, 4, 2, 5});
    auto D3r = compose(kron(I, D), D), D3l = compose(kron(D, I), D);
    return C{{m, m, m}, {P}, {D3r, f}}.materialize() - compose(f, m) + C{{m, m, m}, {P}, {f, D3l}}.materialize();
  }
  throw std::invalid_argument("hochschild_d is implemented for total degree up to 3");
}

/// coHochschild differential on Hom(V^p, V^q) for p + q ≤ 4:
///   (1,1) (1⊗f)Δ − Δf + (f⊗1)Δ
///   (1,2) (1⊗φ)Δ − (Δ⊗1)φ + (1⊗Δ)φ − (φ⊗1)Δ
///   (2,1) (μ⊗φ)τ₂(Δ⊗Δ) − Δφ + (φ⊗μ)τ₂(Δ⊗Δ)
///   (1,3) (1⊗ψ)Δ − (Δ⊗1²)ψ + (1⊗Δ⊗1)ψ − (1²⊗Δ)ψ + (ψ⊗1)Δ
///   (2,2) (μ⊗ψ)τ₂(Δ⊗Δ) − (Δ⊗1)ψ + (1⊗Δ)ψ − (ψ⊗μ)τ₂(Δ⊗Δ)
///   (3,1) (μ(1⊗μ)⊗ψ)Π(Δ⊗Δ⊗Δ) − Δψ + (ψ⊗μ(μ⊗1))Π(Δ⊗Δ⊗Δ),  Π: a₁a₂b₁b₂c₁c₂ ↦ a₁b₁c₁a₂b₂c₂
template <FieldScalar F>
LinearMap<F> cohochschild_d(const LinearMap<F>& f, const Bialgebra<F>& b) {
  detail::BialgebraOps<F> o(b);
  using C = Composite<F>;
  const auto &I = o.I, &m = o.m, &D = o.D;
  unsigned p = f.domain_power(), q = f.codomain_power();
  if (p == 1 && q == 1) return compose(kron(I, f), D) - compose(D, f) + compose(kron(f, I), D);
  if (p == 1 && q == 2)
    return compose(kron(I, f), D) - compose(kron(D, I), f) + compose(kron(I, D), f) - compose(kron(f, I), D);
  if (p == 2 && q == 1)
    return C{{m, f}, o.t2(), {D, D}}.materialize() - compose(D, f) + C{{f, m}, o.t2(), {D, D}}.materialize();
  if (p == 1 && q == 3) {
    auto I2 = o.id(2);
    return compose(kron(I, f), D) - compose(kron(D, I2), f) + compose(kron({I, D, I}), f) - compose(kron(I2, D), f) +
           compose(kron(f, I), D);
  }
  if (p == 2 && q == 2)
    return C{{m, f}, o.t2(), {D, D}}.materialize() - compose(kron(D, I), f) + compose(kron(I, D), f) -
           C{{f, m}, o.t2(), {D, D}}.materialize();
  if (p == 3 && q == 1) {
    auto Pi = o.perm({0, 2, 4, 1, 3, 5});
    auto mr = compose(m, kron(I, m)), ml = compose(m, kron(m, I));
    return C{{mr, f}, {Pi}, {D, D, D}}.materialize() - compose(D, f) + C{{f, ml}, {Pi}, {D, D, D}}.materialize();
  }
  throw std::invalid_argument("cohochschild_d is implemented for total degree up to 3");
}

template <FieldScalar F>
BialgebraCochain<F> hochschild_d(const BialgebraCochain<F>& c, const Bialgebra<F>& b) {
  return {hochschild_d(c.map, b)};
}

template <FieldScalar F>
BialgebraCochain<F> cohochschild_d(const BialgebraCochain<F>& c, const Bialgebra<F>& b) {
  return {cohochschild_d(c.map, b)};
}

/// D(f) = (d_H f, d_C f). With D = d_H − d_C on the pair, D∘D = 0 forces
/// this sign on the second component.
template <FieldScalar F>
std::pair<LinearMap<F>, LinearMap<F>> total_d(const LinearMap<F>& f, const Bialgebra<F>& b) {
  return {hochschild_d(f, b), cohochschild_d(f, b)};
}

template <FieldScalar F>
struct Bialgebra3 {
  LinearMap<F> psi1, psi2, psi3;  // Hom(V³,V), Hom(V²,V²), Hom(V,V³)
};

/// D(φ₁, φ₂) = (d_H φ₁, d_H φ₂ − d_C φ₁, −d_C φ₂)
template <FieldScalar F>
Bialgebra3<F> total_d(const LinearMap<F>& phi1, const LinearMap<F>& phi2, const Bialgebra<F>& b) {
  return {hochschild_d(phi1, b), hochschild_d(phi2, b) - cohochschild_d(phi1, b), -cohochschild_d(phi2, b)};
}

/// d_H ψ₁ = 0, d_C ψ₁ = d_H ψ₂, d_C ψ₂ = d_H ψ₃, d_C ψ₃ = 0, with the sign
/// ψ₂ ↦ −ψ₂ that matches the total differential above.
template <FieldScalar F>
bool is_bialgebra_3cocycle(const Bialgebra3<F>& c, const Bialgebra<F>& b) {
  return hochschild_d(c.psi1, b).is_zero() && cohochschild_d(c.psi1, b) == -hochschild_d(c.psi2, b) &&
         cohochschild_d(c.psi2, b) == -hochschild_d(c.psi3, b) && cohochschild_d(c.psi3, b).is_zero();
}

// ---------------------------------------------------------------------------
// Truncated polynomial maps over k[t]/(t^m)

/// Σ_k t^k coeffs[k], arithmetic truncated at t^order.
template <FieldScalar F>
class TruncatedMap {
 public:
  TruncatedMap(std::vector<LinearMap<F>> coeffs, std::size_t order) : c_(std::move(coeffs)), order_(order) {
    if (c_.empty()) throw std::invalid_argument("a truncated map needs a constant term");
    while (c_.size() > order_) c_.pop_back();
    while (c_.size() < order_) c_.push_back(LinearMap<F>::zero(c_[0].space_ptr(), c_[0].domain_power(), c_[0].codomain_power()));
  }

  static TruncatedMap constant(LinearMap<F> m, std::size_t order) { return TruncatedMap({std::move(m)}, order); }

  std::size_t order() const { return order_; }
  const LinearMap<F>& coeff(std::size_t k) const { return c_.at(k); }
  const std::vector<LinearMap<F>>& coeffs() const { return c_; }

  friend TruncatedMap compose(const TruncatedMap& a, const TruncatedMap& b) {
    return combine(a, b, [](const LinearMap<F>& x, const LinearMap<F>& y) { return compose(x, y); },
                   b.c_[0].domain_power(), a.c_[0].codomain_power());
  }

  friend TruncatedMap kron(const TruncatedMap& a, const TruncatedMap& b) {
    return combine(a, b, [](const LinearMap<F>& x, const LinearMap<F>& y) { return kron(x, y); },
                   a.c_[0].domain_power() + b.c_[0].domain_power(), a.c_[0].codomain_power() + b.c_[0].codomain_power());
  }

  friend TruncatedMap operator-(const TruncatedMap& a, const TruncatedMap& b) {
    std::vector<LinearMap<F>> out;
    for (std::size_t k = 0; k < a.order_; ++k) out.push_back(a.c_[k] - b.c_[k]);
    return TruncatedMap(std::move(out), a.order_);
  }

  /// Lowest k with a nonzero coefficient, or order() if the map is 0.
  std::size_t valuation() const {
    for (std::size_t k = 0; k < order_; ++k)
      if (!c_[k].is_zero()) return k;
    return order_;
  }

 private:
  template <class Op>
  static TruncatedMap combine(const TruncatedMap& a, const TruncatedMap& b, Op op, unsigned dp, unsigned cp) {
    if (a.order_ != b.order_) throw std::invalid_argument("truncation orders differ");
    std::size_t n = a.order_;
    std::vector<LinearMap<F>> out;
    for (std::size_t k = 0; k < n; ++k) {
      auto acc = LinearMap<F>::zero(a.c_[0].space_ptr(), dp, cp);
      for (std::size_t i = 0; i <= k; ++i)
        if (!a.c_[i].is_zero() && !b.c_[k - i].is_zero()) acc = acc + op(a.c_[i], b.c_[k - i]);
      out.push_back(std::move(acc));
    }
    return TruncatedMap(std::move(out), n);
  }

  std::vector<LinearMap<F>> c_;
  std::size_t order_;
};

/// Base maps and perturbations: first[k], second[k] are the t^k terms, k ≥ 1.
/// For shelves first = q, second = Δ; for bialgebras first = μ, second = Δ.
template <FieldScalar F>
struct TruncatedDeformation {
  LinearMap<F> first, second;
  std::vector<LinearMap<F>> first_terms, second_terms;  // index k−1 holds the t^k term

  std::size_t length() const { return std::max(first_terms.size(), second_terms.size()); }

  TruncatedMap<F> first_bar(std::size_t upto, std::size_t order) const { return bar(first, first_terms, upto, order); }
  TruncatedMap<F> second_bar(std::size_t upto, std::size_t order) const { return bar(second, second_terms, upto, order); }

 private:
  static TruncatedMap<F> bar(const LinearMap<F>& base, const std::vector<LinearMap<F>>& terms, std::size_t upto,
                             std::size_t order) {
    std::vector<LinearMap<F>> c{base};
    for (std::size_t k = 1; k <= upto; ++k)
      c.push_back(k <= terms.size() ? terms[k - 1]
                                    : LinearMap<F>::zero(base.space_ptr(), base.domain_power(), base.codomain_power()));
    return TruncatedMap<F>(std::move(c), order);
  }
};

/// The three defects (self-distributivity, compatibility, coassociativity)
/// q̄(q̄⊗1) − q̄(q̄⊗q̄)τ₂(1²⊗Δ̄), Δ̄q̄ − (q̄⊗q̄)τ₂(Δ̄⊗Δ̄), (Δ̄⊗1)Δ̄ − (1⊗Δ̄)Δ̄.
template <FieldScalar F>
std::array<TruncatedMap<F>, 3> shelf_defects(const TruncatedMap<F>& q, const TruncatedMap<F>& D) {
  const auto& sp = q.coeff(0).space_ptr();
  std::size_t n = q.order();
  auto I = TruncatedMap<F>::constant(LinearMap<F>::identity(sp, 1), n);
  auto I2 = TruncatedMap<F>::constant(LinearMap<F>::identity(sp, 2), n);
  auto t2 = TruncatedMap<F>::constant(LinearMap<F>::permutation(sp, {0, 2, 1, 3}), n);
  auto sd = compose(q, kron(q, I)) - compose(compose(q, kron(q, q)), compose(t2, kron(I2, D)));
  auto cp = compose(D, q) - compose(kron(q, q), compose(t2, kron(D, D)));
  auto ca = compose(kron(D, I), D) - compose(kron(I, D), D);
  return {sd, cp, ca};
}

/// Associativity, compatibility and coassociativity defects of (μ̄, Δ̄).
template <FieldScalar F>
std::array<TruncatedMap<F>, 3> bialgebra_defects(const TruncatedMap<F>& m, const TruncatedMap<F>& D) {
  const auto& sp = m.coeff(0).space_ptr();
  std::size_t n = m.order();
  auto I = TruncatedMap<F>::constant(LinearMap<F>::identity(sp, 1), n);
  auto t2 = TruncatedMap<F>::constant(LinearMap<F>::permutation(sp, {0, 2, 1, 3}), n);
  auto as = compose(m, kron(m, I)) - compose(m, kron(I, m));
  auto cp = compose(D, m) - compose(kron(m, m), compose(t2, kron(D, D)));
  auto ca = compose(kron(D, I), D) - compose(kron(I, D), D);
  return {as, cp, ca};
}

enum class DeformationKind { Shelf, Bialgebra };

/// Coefficients of t^{n+1} in the three defects of the order-n truncation.
/// Throws if a defect is already nonzero below t^{n+1}.
template <FieldScalar F>
std::array<LinearMap<F>, 3> deformation_obstructions(const TruncatedDeformation<F>& d, std::size_t n,
                                                     DeformationKind kind = DeformationKind::Shelf) {
  auto a = d.first_bar(n, n + 2), b = d.second_bar(n, n + 2);
  auto defects = kind == DeformationKind::Shelf ? shelf_defects(a, b) : bialgebra_defects(a, b);
  for (const auto& x : defects)
    if (x.valuation() <= n) throw std::invalid_argument("the truncation fails the axioms below the requested order");
  return {defects[0].coeff(n + 1), defects[1].coeff(n + 1), defects[2].coeff(n + 1)};
}

struct DeformationReport {
  bool axioms_mod_t2 = false;
  bool is_2cocycle = false;
  bool agree() const { return axioms_mod_t2 == is_2cocycle; }
};

/// Compares "q + t q₁, Δ + t Δ₁ satisfy the three axioms mod t²" (truncated
/// arithmetic) with D₂(q₁, Δ₁) = 0 (the differentials).
template <FieldScalar F>
DeformationReport check_deformation(const ShelfStructure<F>& s, const LinearMap<F>& q1, const LinearMap<F>& D1) {
  DeformationReport r;
  TruncatedDeformation<F> d{s.q, s.delta(), {q1}, {D1}};
  auto defects = shelf_defects(d.first_bar(1, 2), d.second_bar(1, 2));
  r.axioms_mod_t2 = true;
  for (const auto& x : defects) r.axioms_mod_t2 = r.axioms_mod_t2 && x.valuation() >= 2;
  ShelfDifferentials<F> diff(s);
  auto xi = diff.D2(q1, D1);
  r.is_2cocycle = xi.xi1.is_zero() && xi.xi2.is_zero() && xi.xi3.is_zero();
  return r;
}

}  // namespace shelf

#endif  // SHELF_HOCHSCHILD_HPP
