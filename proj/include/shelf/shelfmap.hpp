// Self-distributive maps q: X⊗X → X and their constructions from racks, Lie
// algebras and Hopf algebras.

#ifndef SHELF_SHELFMAP_HPP
#define SHELF_SHELFMAP_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "shelf/coalgebra.hpp"
#include "shelf/rack.hpp"

namespace shelf {

enum class Provenance { Rack, Lie, HopfAdjoint, Explicit };

inline std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Rack: return "rack";
    case Provenance::Lie: return "lie";
    case Provenance::HopfAdjoint: return "hopf_adjoint";
    case Provenance::Explicit: return "explicit";
  }
  return "?";
}

namespace detail {

template <FieldScalar F>
void require_binary(const LinearMap<F>& q, const Coalgebra<F>& c) {
  if (q.domain_power() != 2 || q.codomain_power() != 1) throw std::invalid_argument("shape mismatch: q must map X⊗X to X");
  if (!q.space().compatible(c.space())) throw std::invalid_argument("mismatched space");
}

}  // namespace detail

/// q(q⊗1)
template <FieldScalar F>
LinearMap<F> sd_lhs(const LinearMap<F>& q) {
  auto I = id_map<F>(q.space_ptr());
  return Composite<F>{{q}, {q, I}}.materialize();
}

/// q(q⊗q)(1⊗τ⊗1)(1⊗1⊗Δ)
template <FieldScalar F>
LinearMap<F> sd_rhs(const LinearMap<F>& q, const LinearMap<F>& delta) {
  const auto& sp = q.space_ptr();
  auto I = id_map<F>(sp);
  return Composite<F>{{q}, {q, q}, {I, swap_map<F>(sp), I}, {id_map<F>(sp, 2), delta}}.materialize();
}

template <FieldScalar F>
bool check_self_distributive(const LinearMap<F>& q, const Coalgebra<F>& c) {
  detail::require_binary(q, c);
  return sd_lhs(q) == sd_rhs(q, c.delta());
}

/// Δq = (q⊗q)(1⊗τ⊗1)(Δ⊗Δ)
template <FieldScalar F>
bool check_comult_compatible(const LinearMap<F>& q, const Coalgebra<F>& c) {
  detail::require_binary(q, c);
  const auto& sp = c.space_ptr();
  auto I = id_map<F>(sp);
  auto rhs = Composite<F>{{q, q}, {I, swap_map<F>(sp), I}, {c.delta(), c.delta()}}.materialize();
  return compose(c.delta(), q) == rhs;
}

struct CounitReport {
  bool strict = false;                // εq = ε⊗ε
  std::optional<bool> weak;           // ηεq = q(ηε⊗1), with η the unit line k → X
};

/// Index of the basis vector labelled "1", if any.
inline std::optional<std::size_t> unit_basis_index(const BasedSpace& sp) {
  for (std::size_t i = 0; i < sp.dim; ++i)
    if (sp.labels[i] == "1") return i;
  return std::nullopt;
}

template <FieldScalar F>
CounitReport check_counit_behavior(const LinearMap<F>& q, const Coalgebra<F>& c,
                                   std::optional<std::size_t> unit_index = std::nullopt) {
  detail::require_binary(q, c);
  const auto& sp = c.space_ptr();
  CounitReport r;
  auto eq = compose(c.epsilon(), q);
  r.strict = eq == kron(c.epsilon(), c.epsilon());
  if (!unit_index) unit_index = unit_basis_index(*sp);
  if (unit_index) {
    MapBuilder<F> b(sp, 0, 1);
    b.add({}, {*unit_index}, F::from_int(1, sp->field));
    auto eta = b.build("unit");
    auto eta_eps = compose(eta, c.epsilon());
    r.weak = compose(eta, eq) == compose(q, kron(eta_eps, id_map<F>(sp)));
  }
  return r;
}

template <FieldScalar F>
struct ShelfStructure {
  Coalgebra<F> coalgebra;
  LinearMap<F> q;
  Provenance provenance = Provenance::Explicit;
  bool comult_compatible = false;
  CounitReport counit;

  const std::shared_ptr<const BasedSpace>& space_ptr() const { return coalgebra.space_ptr(); }
  const LinearMap<F>& delta() const { return coalgebra.delta(); }
  const LinearMap<F>& epsilon() const { return coalgebra.epsilon(); }
  std::size_t dim() const { return coalgebra.dim(); }
};

/// Verifies self-distributivity (throws otherwise) and records the
/// compatibility and counit status.
template <FieldScalar F>
ShelfStructure<F> make_shelf(Coalgebra<F> c, LinearMap<F> q, Provenance prov) {
  if (!check_self_distributive(q, c)) throw std::invalid_argument("q is not self-distributive");
  ShelfStructure<F> s{std::move(c), std::move(q), prov, false, {}};
  s.comult_compatible = check_comult_compatible(s.q, s.coalgebra);
  s.counit = check_counit_behavior(s.q, s.coalgebra);
  return s;
}

/// On W = k ⊕ kX: q(x⊗y) = x◁y, q(1⊗x) = 1, q(x⊗1) = q(1⊗1) = 0.
template <FieldScalar F>
LinearMap<F> rack_q(const FiniteRack& r, const std::shared_ptr<const BasedSpace>& sp) {
  F one = F::from_int(1, sp->field);
  MapBuilder<F> b(sp, 2, 1);
  for (std::size_t x = 0; x < r.n; ++x) {
    b.add({0, x + 1}, {0}, one);
    for (std::size_t y = 0; y < r.n; ++y) b.add({x + 1, y + 1}, {r.op(x, y) + 1}, one);
  }
  return b.build("q");
}

/// On kX with Δx = x⊗x: q(x⊗y) = x◁y.
template <FieldScalar F>
LinearMap<F> setlike_rack_q(const FiniteRack& r, const std::shared_ptr<const BasedSpace>& sp) {
  F one = F::from_int(1, sp->field);
  MapBuilder<F> b(sp, 2, 1);
  for (std::size_t x = 0; x < r.n; ++x)
    for (std::size_t y = 0; y < r.n; ++y) b.add({x, y}, {r.op(x, y)}, one);
  return b.build("q");
}

template <FieldScalar F>
ShelfStructure<F> q_from_rack(const FiniteRack& r, FieldSpec field) {
  auto c = build_augmented<F>(r.n, field);
  auto q = rack_q<F>(r, c.space_ptr());
  auto s = make_shelf(std::move(c), std::move(q), Provenance::Rack);
  if (!s.comult_compatible) throw std::logic_error("rack shelf failed comultiplication compatibility");
  return s;
}

/// On N = k ⊕ g: q((a,x)⊗(b,y)) = (ab, bx + [x,y]).
template <FieldScalar F>
LinearMap<F> lie_q(const LieAlgebra<F>& g, const std::shared_ptr<const BasedSpace>& sp) {
  F one = F::from_int(1, sp->field);
  MapBuilder<F> b(sp, 2, 1);
  b.add({0, 0}, {0}, one);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    b.add({i + 1, 0}, {i + 1}, one);
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const auto& br = g.bracket(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!br[k].is_zero()) b.add({i + 1, j + 1}, {k + 1}, br[k]);
    }
  }
  return b.build("q");
}

template <FieldScalar F>
ShelfStructure<F> q_from_lie(const LieAlgebra<F>& g) {
  auto c = build_lie_N(g);
  auto q = lie_q<F>(g, c.space_ptr());
  auto s = make_shelf(std::move(c), std::move(q), Provenance::Lie);
  if (!s.comult_compatible || !s.counit.strict) throw std::logic_error("Lie shelf failed the coalgebra morphism checks");
  return s;
}

/// q = μ(1⊗μ)(S⊗1⊗1)(τ⊗1)(1⊗Δ), i.e. q(x⊗y) = S(y₁) x y₂.
template <FieldScalar F>
LinearMap<F> adjoint_q(const HopfData<F>& h) {
  const auto& sp = h.space_ptr();
  auto I = id_map<F>(sp);
  return Composite<F>{{h.mu()}, {I, h.mu()}, {h.antipode(), I, I}, {swap_map<F>(sp), I}, {I, h.delta()}}
      .materialize()
      .named("q");
}

template <FieldScalar F>
ShelfStructure<F> q_adjoint(const HopfData<F>& h) {
  return make_shelf(h.coalgebra(), adjoint_q(h), Provenance::HopfAdjoint);
}

}  // namespace shelf

#endif  // SHELF_SHELFMAP_HPP
