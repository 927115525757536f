// Yang–Baxter operators induced by self-distributive maps and back.

#ifndef SHELF_YANGBAXTER_HPP
#define SHELF_YANGBAXTER_HPP

#include "shelf/linalg.hpp"
#include "shelf/shelfmap.hpp"

namespace shelf {

template <FieldScalar F>
struct YBOperator {
  std::shared_ptr<const BasedSpace> space;
  LinearMap<F> R;
  bool invertible = false;
};

template <FieldScalar F>
YBOperator<F> make_yb_operator(LinearMap<F> R) {
  if (R.domain_power() != 2 || R.codomain_power() != 2) throw std::invalid_argument("R must map X⊗X to X⊗X");
  bool inv = rank_kernel(R).rank == R.domain_dim();
  auto sp = R.space_ptr();
  return {std::move(sp), std::move(R), inv};
}

/// R_q = (1⊗q)(τ⊗1)(1⊗Δ)
template <FieldScalar F>
LinearMap<F> induced_r(const LinearMap<F>& q, const LinearMap<F>& delta) {
  const auto& sp = q.space_ptr();
  auto I = id_map<F>(sp);
  return Composite<F>{{I, q}, {swap_map<F>(sp), I}, {I, delta}}.materialize().named("R");
}

template <FieldScalar F>
YBOperator<F> r_from_q(const ShelfStructure<F>& s) {
  return make_yb_operator(induced_r(s.q, s.delta()));
}

/// q_R = (ε⊗1)R
template <FieldScalar F>
LinearMap<F> q_from_r(const LinearMap<F>& R, const Coalgebra<F>& c) {
  return compose(kron(c.epsilon(), id_map<F>(c.space_ptr())), R).named("q");
}

template <FieldScalar F>
LinearMap<F> q_from_r(const YBOperator<F>& R, const Coalgebra<F>& c) {
  return q_from_r(R.R, c);
}

template <FieldScalar F>
bool check_ybe(const LinearMap<F>& R) {
  auto I = id_map<F>(R.space_ptr());
  auto a = kron(R, I), b = kron(I, R);
  return Composite<F>{{a}, {b}, {a}}.materialize() == Composite<F>{{b}, {a}, {b}}.materialize();
}

template <FieldScalar F>
bool check_ybe(const YBOperator<F>& R) {
  return check_ybe(R.R);
}

struct InducedShelfReport {
  bool counit_condition = false;  // (ε⊗ε)R = ε⊗ε
  bool fixed_point = false;       // R_{q_R} = R
  bool hypotheses() const { return counit_condition && fixed_point; }
  // Evaluated only when both hypotheses hold.
  std::optional<bool> conclusion_shelf_in_coalg;
};

template <FieldScalar F>
InducedShelfReport check_induced_shelf(const LinearMap<F>& R, const Coalgebra<F>& c) {
  InducedShelfReport r;
  auto ee = kron(c.epsilon(), c.epsilon());
  r.counit_condition = compose(ee, R) == ee;
  auto qR = q_from_r(R, c);
  r.fixed_point = induced_r(qR, c.delta()) == R;
  if (r.hypotheses())
    r.conclusion_shelf_in_coalg = check_self_distributive(qR, c) && check_comult_compatible(qR, c) &&
                                  check_counit_behavior(qR, c).strict;
  return r;
}

struct AdjointIdentityReport {
  bool eq1 = false;  // q(q⊗1) = q(1⊗μ)
  bool eq2 = false;  // (q⊗μ)(1⊗τ⊗1)(Δ⊗Δ) = (1⊗μ)(τ⊗1)(1⊗Δ)(1⊗q)(τ⊗1)(1⊗Δ)
};

template <FieldScalar F>
AdjointIdentityReport check_adjoint_identities(const LinearMap<F>& q, const HopfData<F>& h) {
  const auto& sp = h.space_ptr();
  auto I = id_map<F>(sp);
  auto T = swap_map<F>(sp);
  AdjointIdentityReport r;
  r.eq1 = Composite<F>{{q}, {q, I}}.materialize() == Composite<F>{{q}, {I, h.mu()}}.materialize();
  auto lhs = Composite<F>{{q, h.mu()}, {I, T, I}, {h.delta(), h.delta()}}.materialize();
  auto rhs = Composite<F>{{I, h.mu()}, {T, I}, {I, h.delta()}, {I, q}, {T, I}, {I, h.delta()}}.materialize();
  r.eq2 = lhs == rhs;
  return r;
}

/// R((a,x)⊗(b,y)) = (b,y)⊗(a,x) + (1,0)⊗(0,[x,y]) on N = k ⊕ g.
template <FieldScalar F>
LinearMap<F> lie_r_closed_form(const LieAlgebra<F>& g, const std::shared_ptr<const BasedSpace>& sp) {
  F one = F::from_int(1, sp->field);
  std::size_t d = sp->dim;
  MapBuilder<F> b(sp, 2, 2);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      b.add({u, v}, {v, u}, one);
      if (u == 0 || v == 0) continue;
      const auto& br = g.bracket(u - 1, v - 1);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!br[k].is_zero()) b.add({u, v}, {0, k + 1}, br[k]);
    }
  return b.build("R");
}

}  // namespace shelf

#endif  // SHELF_YANGBAXTER_HPP
