// Named fixtures: racks, Lie algebras and Hopf algebras by short name, or read
// from a file when the name is an existing path.

#ifndef SHELF_FIXTURES_HPP
#define SHELF_FIXTURES_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shelf/coalgebra.hpp"
#include "shelf/lie.hpp"
#include "shelf/rack.hpp"

namespace shelf {

namespace detail {

inline std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, ':')) out.push_back(part);
  return out;
}

inline std::size_t parse_size(const std::string& s, const std::string& what) {
  if (s.empty() || !detail::is_int_literal(s) || s.front() == '-') throw std::invalid_argument("bad " + what + " '" + s + "'");
  return std::stoull(s);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool is_file(const std::string& name) { return std::filesystem::is_regular_file(name); }

}  // namespace detail

/// dihedral:n, trivial:n, conj:S3, alexander:n:t, or a rack file.
inline FiniteRack rack_fixture(const std::string& name) {
  if (detail::is_file(name)) {
    std::istringstream is(detail::read_file(name));
    auto r = read_rack(is);
    r.name = name;
    return r;
  }
  auto parts = detail::split_colon(name);
  const auto& kind = parts[0];
  if (kind == "dihedral" && parts.size() == 2) return dihedral_quandle(detail::parse_size(parts[1], "order"));
  if (kind == "trivial" && parts.size() == 2) return trivial_quandle(detail::parse_size(parts[1], "order"));
  if (kind == "conj" && parts.size() == 2 && parts[1] == "S3") return conjugation_quandle(symmetric_group_s3(), "conj:S3");
  if (kind == "alexander" && parts.size() == 3)
    return alexander_quandle(detail::parse_size(parts[1], "modulus"), detail::parse_size(parts[2], "multiplier"));
  throw std::invalid_argument("unknown rack fixture '" + name + "'");
}

/// Field a Lie fixture lives over, when the fixture fixes it (witt:p).
inline std::optional<FieldSpec> lie_fixture_field(const std::string& name) {
  auto parts = detail::split_colon(name);
  if (parts[0] == "witt" && parts.size() == 2) return FieldSpec::prime(detail::parse_size(parts[1], "prime"));
  return std::nullopt;
}

/// witt:p, sl2-type, abelian:n, or a Lie file over `field`.
template <FieldScalar F>
LieAlgebra<F> lie_fixture(const std::string& name, FieldSpec field) {
  if (detail::is_file(name)) {
    std::istringstream is(detail::read_file(name));
    return read_lie<F>(is, field);
  }
  auto parts = detail::split_colon(name);
  if (parts[0] == "witt" && parts.size() == 2) {
    auto p = detail::parse_size(parts[1], "prime");
    if (field != FieldSpec::prime(p)) throw std::invalid_argument("witt:" + parts[1] + " lives over fp:" + parts[1]);
    return witt<F>(p);
  }
  if (name == "sl2-type") return sl2_type<F>(field);
  if (parts[0] == "abelian" && parts.size() == 2) return abelian_lie<F>(field, detail::parse_size(parts[1], "dimension"));
  throw std::invalid_argument("unknown Lie fixture '" + name + "'");
}

/// Field named inside a Hopf structure file; nullopt for built-in fixtures.
inline std::optional<FieldSpec> hopf_fixture_field(const std::string& name) {
  if (detail::is_file(name)) return structure_field(detail::read_file(name));
  return std::nullopt;
}

/// group:Z<n>, group:S3, or a structure file with maps delta, epsilon, mu, unit, antipode.
template <FieldScalar F>
HopfData<F> hopf_fixture(const std::string& name, FieldSpec field) {
  if (detail::is_file(name)) {
    std::istringstream is(detail::read_file(name));
    auto s = read_structure<F>(is);
    if (s.field != field) throw std::invalid_argument("structure file field does not match --field");
    return hopf_from_structure(s);
  }
  auto parts = detail::split_colon(name);
  if (parts[0] == "group" && parts.size() == 2) {
    if (parts[1] == "S3") return build_group_hopf<F>(symmetric_group_s3(), field);
    if (parts[1].size() > 1 && parts[1][0] == 'Z')
      return build_group_hopf<F>(cyclic_group(detail::parse_size(parts[1].substr(1), "order")), field);
  }
  throw std::invalid_argument("unknown Hopf fixture '" + name + "'");
}

}  // namespace shelf

#endif  // SHELF_FIXTURES_HPP
