// Coalgebras, bialgebras and Hopf algebras as verified structure-constant
// bundles, and the standard constructions on them.

#ifndef SHELF_COALGEBRA_HPP
#define SHELF_COALGEBRA_HPP

#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shelf/group.hpp"
#include "shelf/lie.hpp"
#include "shelf/tensorspace.hpp"

namespace shelf {

template <FieldScalar F>
LinearMap<F> id_map(const std::shared_ptr<const BasedSpace>& sp, unsigned k = 1) {
  return LinearMap<F>::identity(sp, k);
}

template <FieldScalar F>
LinearMap<F> swap_map(const std::shared_ptr<const BasedSpace>& sp) {
  return LinearMap<F>::transposition(sp, 2, 1);
}

struct CoalgebraReport {
  bool coassociative = false;
  bool counital = false;
  bool cocommutative = false;
};

template <FieldScalar F>
CoalgebraReport check_coalgebra_maps(const LinearMap<F>& delta, const LinearMap<F>& epsilon) {
  const auto& sp = delta.space_ptr();
  auto I = id_map<F>(sp);
  CoalgebraReport r;
  r.coassociative = compose(kron(delta, I), delta) == compose(kron(I, delta), delta);
  r.counital = compose(kron(epsilon, I), delta) == I && compose(kron(I, epsilon), delta) == I;
  r.cocommutative = compose(swap_map<F>(sp), delta) == delta;
  return r;
}

template <FieldScalar F>
class Coalgebra {
 public:
  /// Refuses structures that are not coassociative and counital.
  Coalgebra(std::shared_ptr<const BasedSpace> space, LinearMap<F> delta, LinearMap<F> epsilon)
      : space_(std::move(space)), delta_(std::move(delta)), epsilon_(std::move(epsilon)) {
    if (delta_.domain_power() != 1 || delta_.codomain_power() != 2) throw std::invalid_argument("delta must map X to X⊗X");
    if (epsilon_.domain_power() != 1 || epsilon_.codomain_power() != 0) throw std::invalid_argument("epsilon must map X to k");
    if (!space_->compatible(delta_.space()) || !space_->compatible(epsilon_.space())) throw std::invalid_argument("mismatched space");
    report_ = check_coalgebra_maps(delta_, epsilon_);
    if (!report_.coassociative) throw std::invalid_argument("comultiplication is not coassociative");
    if (!report_.counital) throw std::invalid_argument("counit axiom fails");
  }

  const std::shared_ptr<const BasedSpace>& space_ptr() const { return space_; }
  const BasedSpace& space() const { return *space_; }
  std::size_t dim() const { return space_->dim; }
  const LinearMap<F>& delta() const { return delta_; }
  const LinearMap<F>& epsilon() const { return epsilon_; }
  bool cocommutative() const { return report_.cocommutative; }
  const CoalgebraReport& report() const { return report_; }

 private:
  std::shared_ptr<const BasedSpace> space_;
  LinearMap<F> delta_, epsilon_;
  CoalgebraReport report_;
};

template <FieldScalar F>
CoalgebraReport verify_coalgebra(const Coalgebra<F>& c) {
  return check_coalgebra_maps(c.delta(), c.epsilon());
}

/// Every basis vector group-like: Δx = x⊗x, ε(x) = 1.
template <FieldScalar F>
Coalgebra<F> build_setlike(std::vector<std::string> labels, FieldSpec field) {
  auto sp = std::make_shared<const BasedSpace>(std::move(labels), field);
  F one = F::from_int(1, field);
  MapBuilder<F> d(sp, 1, 2), e(sp, 1, 0);
  for (std::size_t x = 0; x < sp->dim; ++x) {
    d.add({x}, {x, x}, one);
    e.add({x}, {}, one);
  }
  return Coalgebra<F>(sp, d.build("delta"), e.build("epsilon"));
}

/// W = k ⊕ kX; basis 0 is the unit, basis 1 + x is the rack element x.
template <FieldScalar F>
Coalgebra<F> build_augmented(std::size_t rack_size, FieldSpec field) {
  if (rack_size == 0) throw std::invalid_argument("rack size must be positive");
  std::vector<std::string> labels{"1"};
  for (std::size_t x = 0; x < rack_size; ++x) labels.push_back("x" + std::to_string(x));
  return build_setlike<F>(std::move(labels), field);
}

/// N = k ⊕ g; basis 0 is the unit, basis 1 + i is e_i. Δx = x⊗1 + 1⊗x.
template <FieldScalar F>
Coalgebra<F> build_lie_N(const LieAlgebra<F>& g) {
  if (g.field().characteristic() == 2) throw std::invalid_argument("characteristic 2 is not supported");
  std::vector<std::string> labels{"1"};
  for (const auto& l : g.labels()) labels.push_back(l);
  auto sp = std::make_shared<const BasedSpace>(std::move(labels), g.field());
  F one = F::from_int(1, g.field());
  MapBuilder<F> d(sp, 1, 2), e(sp, 1, 0);
  d.add({0}, {0, 0}, one);
  e.add({0}, {}, one);
  for (std::size_t x = 1; x < sp->dim; ++x) {
    d.add({x}, {x, 0}, one);
    d.add({x}, {0, x}, one);
  }
  return Coalgebra<F>(sp, d.build("delta"), e.build("epsilon"));
}

/// Δa = a⊗a − b⊗b, Δb = a⊗b + b⊗a, ε(a) = 1, ε(b) = 0.
template <FieldScalar F>
Coalgebra<F> build_trig(FieldSpec field) {
  auto sp = std::make_shared<const BasedSpace>(std::vector<std::string>{"a", "b"}, field);
  F one = F::from_int(1, field);
  MapBuilder<F> d(sp, 1, 2), e(sp, 1, 0);
  d.add({0}, {0, 0}, one);
  d.add({0}, {1, 1}, -one);
  d.add({1}, {0, 1}, one);
  d.add({1}, {1, 0}, one);
  e.add({0}, {}, one);
  return Coalgebra<F>(sp, d.build("delta"), e.build("epsilon"));
}

struct HopfReport {
  bool associativity = false;
  bool coassociativity = false;
  bool unit = false;
  bool counit = false;
  bool compatibility = false;
  bool antipode = false;

  bool all() const { return associativity && coassociativity && unit && counit && compatibility && antipode; }
};

template <FieldScalar F>
HopfReport check_hopf_maps(const LinearMap<F>& mu, const LinearMap<F>& unit, const LinearMap<F>& delta,
                           const LinearMap<F>& epsilon, const LinearMap<F>& antipode) {
  const auto& sp = mu.space_ptr();
  auto I = id_map<F>(sp);
  auto tau2 = LinearMap<F>::transposition(sp, 4, 2);
  auto c = check_coalgebra_maps(delta, epsilon);
  auto scalar_one = LinearMap<F>::identity(sp, 0);
  HopfReport r;
  r.associativity = compose(mu, kron(mu, I)) == compose(mu, kron(I, mu));
  r.coassociativity = c.coassociative;
  r.unit = compose(mu, kron(unit, I)) == I && compose(mu, kron(I, unit)) == I;
  r.counit = c.counital;
  r.compatibility = compose(delta, mu) == compose(kron(mu, mu), compose(tau2, kron(delta, delta))) &&
                    compose(epsilon, mu) == kron(epsilon, epsilon) && compose(delta, unit) == kron(unit, unit) &&
                    compose(epsilon, unit) == scalar_one;
  auto eta_eps = compose(unit, epsilon);
  r.antipode = compose(mu, compose(kron(antipode, I), delta)) == eta_eps &&
               compose(mu, compose(kron(I, antipode), delta)) == eta_eps;
  return r;
}

template <FieldScalar F>
class HopfData {
 public:
  HopfData(Coalgebra<F> coalgebra, LinearMap<F> mu, LinearMap<F> unit, LinearMap<F> antipode)
      : c_(std::move(coalgebra)), mu_(std::move(mu)), unit_(std::move(unit)), s_(std::move(antipode)) {
    if (mu_.domain_power() != 2 || mu_.codomain_power() != 1) throw std::invalid_argument("mu must map X⊗X to X");
    if (unit_.domain_power() != 0 || unit_.codomain_power() != 1) throw std::invalid_argument("unit must map k to X");
    if (s_.domain_power() != 1 || s_.codomain_power() != 1) throw std::invalid_argument("antipode must map X to X");
  }

  const Coalgebra<F>& coalgebra() const { return c_; }
  const std::shared_ptr<const BasedSpace>& space_ptr() const { return c_.space_ptr(); }
  const LinearMap<F>& mu() const { return mu_; }
  const LinearMap<F>& unit() const { return unit_; }
  const LinearMap<F>& antipode() const { return s_; }
  const LinearMap<F>& delta() const { return c_.delta(); }
  const LinearMap<F>& epsilon() const { return c_.epsilon(); }

  // Structure constants: e_i e_j = Λ_ij^l e_l, Δe_l = Y_l^ij e_i⊗e_j,
  // η(1) = A^i e_i, ε(e_i) = V_i, S(e_i) = s_i^j e_j.
  F Lambda(std::size_t i, std::size_t j, std::size_t l) const { return mu_.entry(l, i * dim() + j); }
  F Y(std::size_t l, std::size_t i, std::size_t j) const { return c_.delta().entry(i * dim() + j, l); }
  F A(std::size_t i) const { return unit_.entry(i, 0); }
  F V(std::size_t i) const { return c_.epsilon().entry(0, i); }
  F s(std::size_t i, std::size_t j) const { return s_.entry(j, i); }

  std::size_t dim() const { return c_.dim(); }

 private:
  Coalgebra<F> c_;
  LinearMap<F> mu_, unit_, s_;
};

template <FieldScalar F>
HopfReport verify_hopf(const HopfData<F>& h) {
  return check_hopf_maps(h.mu(), h.unit(), h.delta(), h.epsilon(), h.antipode());
}

/// Group algebra kG: μ(g⊗h) = gh, Δg = g⊗g, S(g) = g⁻¹, η(1) = e, ε(g) = 1.
template <FieldScalar F>
HopfData<F> build_group_hopf(const CayleyTable& g, FieldSpec field) {
  auto c = build_setlike<F>(g.labels, field);
  const auto& sp = c.space_ptr();
  F one = F::from_int(1, field);
  MapBuilder<F> mu(sp, 2, 1), unit(sp, 0, 1), s(sp, 1, 1);
  for (std::size_t a = 0; a < g.n; ++a) {
    for (std::size_t b = 0; b < g.n; ++b) mu.add({a, b}, {g.mul(a, b)}, one);
    s.add({a}, {g.inverse(a)}, one);
  }
  unit.add({}, {g.identity}, one);
  HopfData<F> h(std::move(c), mu.build("mu"), unit.build("unit"), s.build("antipode"));
  if (!verify_hopf(h).all()) throw std::logic_error("group algebra failed the Hopf axioms");
  return h;
}

// ---------------------------------------------------------------------------
// Structure file: "field <spec>", "space <name> dim <d> labels ...", then map
// blocks named delta, epsilon, mu, unit, antipode (and optionally q).

template <FieldScalar F>
struct StructureFile {
  FieldSpec field;
  std::string space_name;
  std::shared_ptr<const BasedSpace> space;
  std::map<std::string, LinearMap<F>> maps;

  const LinearMap<F>& at(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw std::invalid_argument("structure file lacks map '" + name + "'");
    return it->second;
  }
};

/// Field named on the first non-comment line of a structure file.
inline FieldSpec structure_field(const std::string& text) {
  std::istringstream is(text);
  std::string line, kw, spec;
  while (std::getline(is, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.starts_with("#")) continue;
    std::istringstream ls{std::string(t)};
    ls >> kw >> spec;
    if (kw != "field") throw std::invalid_argument("structure file must start with a field line");
    return parse_field_spec(spec);
  }
  throw std::invalid_argument("empty structure file");
}

template <FieldScalar F>
StructureFile<F> read_structure(std::istream& is) {
  StructureFile<F> out;
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      auto t = detail::trim(line);
      if (!t.empty() && !t.starts_with("#")) return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("empty structure file");
  {
    std::istringstream ls(line);
    std::string kw, spec;
    ls >> kw >> spec;
    if (kw != "field") throw std::invalid_argument("structure file must start with a field line");
    out.field = parse_field_spec(spec);
    if (!scalar_matches<F>(out.field.kind)) throw std::invalid_argument("field does not match the scalar type");
  }
  if (!next_line()) throw std::invalid_argument("structure file lacks a space line");
  {
    std::istringstream ls(line);
    std::string kw, dimkw, labkw;
    std::size_t d = 0;
    ls >> kw >> out.space_name >> dimkw >> d >> labkw;
    if (kw != "space" || dimkw != "dim" || labkw != "labels") throw std::invalid_argument("malformed space line: " + line);
    std::vector<std::string> labels;
    std::string l;
    while (ls >> l) labels.push_back(l);
    if (labels.size() != d) throw std::invalid_argument("label count does not match dim");
    out.space = std::make_shared<const BasedSpace>(std::move(labels), out.field);
  }
  std::optional<MapHeader> header;
  std::optional<MapBuilder<F>> builder;
  auto flush = [&] {
    if (header) out.maps.insert_or_assign(header->name, builder->build(header->name));
  };
  while (next_line()) {
    auto t = detail::trim(line);
    if (t.starts_with("map ")) {
      flush();
      header = parse_map_header(std::string(t));
      if (header->dim != out.space->dim) throw std::invalid_argument("map dimension does not match space");
      builder.emplace(out.space, header->domain_power, header->codomain_power);
    } else {
      if (!header) throw std::invalid_argument("map entry before any map header: " + line);
      parse_map_entry(line, *header, *builder, out.field);
    }
  }
  flush();
  return out;
}

template <FieldScalar F>
void write_structure(std::ostream& os, const std::string& space_name, const BasedSpace& sp,
                     const std::vector<std::pair<std::string, LinearMap<F>>>& maps) {
  os << "field " << sp.field.name() << '\n';
  os << "space " << space_name << " dim " << sp.dim << " labels";
  for (const auto& l : sp.labels) os << ' ' << l;
  os << '\n';
  for (const auto& [name, m] : maps) write_map(os, m, name);
}

template <FieldScalar F>
Coalgebra<F> coalgebra_from_structure(const StructureFile<F>& s) {
  return Coalgebra<F>(s.space, s.at("delta"), s.at("epsilon"));
}

template <FieldScalar F>
HopfData<F> hopf_from_structure(const StructureFile<F>& s) {
  return HopfData<F>(coalgebra_from_structure(s), s.at("mu"), s.at("unit"), s.at("antipode"));
}

}  // namespace shelf

#endif  // SHELF_COALGEBRA_HPP
