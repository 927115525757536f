// Finite racks and quandles by operation table.

#ifndef SHELF_RACK_HPP
#define SHELF_RACK_HPP

#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shelf/group.hpp"

namespace shelf {

struct FiniteRack {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = i ◁ j
  bool quandle = false;
  std::string name;

  std::size_t op(std::size_t i, std::size_t j) const { return table[i][j]; }
};

struct RackAxioms {
  bool right_invertible = true;
  bool self_distributive = true;
  bool idempotent = true;
};

inline RackAxioms check_rack_axioms(const std::vector<std::vector<std::size_t>>& t) {
  RackAxioms r;
  std::size_t n = t.size();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) hit[t[i][j]] = true;
    for (bool h : hit) r.right_invertible = r.right_invertible && h;
  }
  for (std::size_t a = 0; a < n; ++a) {
    r.idempotent = r.idempotent && t[a][a] == a;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) r.self_distributive = false;
  }
  return r;
}

/// Builds a rack from its table; `quandle` additionally demands a ◁ a = a.
/// With `allow_shelf`, only self-distributivity is required.
inline FiniteRack make_rack(std::vector<std::vector<std::size_t>> table, bool quandle, std::string name = "table",
                            bool allow_shelf = false) {
  std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("invalid rack table: empty");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("invalid rack table: not square");
    for (auto x : row)
      if (x >= n) throw std::invalid_argument("invalid rack table: entry out of range");
  }
  auto ax = check_rack_axioms(table);
  if (!ax.self_distributive) throw std::invalid_argument("invalid rack table: not self-distributive");
  if (!allow_shelf && !ax.right_invertible) throw std::invalid_argument("invalid rack table: right translation not bijective");
  if (quandle && !ax.idempotent) throw std::invalid_argument("invalid rack table: not idempotent");
  return {n, std::move(table), quandle, std::move(name)};
}

/// R_n: i ◁ j = 2j - i mod n.
inline FiniteRack dihedral_quandle(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (2 * j + n - i) % n;
  return make_rack(std::move(t), true, "dihedral:" + std::to_string(n));
}

inline FiniteRack trivial_quandle(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = i;
  return make_rack(std::move(t), true, "trivial:" + std::to_string(n));
}

/// a ◁ b = b^{-1} a b.
inline FiniteRack conjugation_quandle(const CayleyTable& g, std::string name = "conj") {
  std::vector<std::vector<std::size_t>> t(g.n, std::vector<std::size_t>(g.n));
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) t[a][b] = g.mul(g.mul(g.inverse(b), a), b);
  return make_rack(std::move(t), true, std::move(name));
}

/// Alexander quandle on Z_n: a ◁ b = t a + (1 - t) b, t a unit mod n.
inline FiniteRack alexander_quandle(std::size_t n, std::size_t t) {
  if (std::gcd(t % n, n) != 1) throw std::invalid_argument("Alexander parameter t must be invertible mod n");
  std::vector<std::vector<std::size_t>> tab(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) tab[a][b] = (t * a + (n + 1 - t % n) * b) % n;
  return make_rack(std::move(tab), true, "alexander:" + std::to_string(n) + "," + std::to_string(t));
}

// Rack file: "rack <n> [quandle]" then n rows of n integers, row i column j = i ◁ j.
inline FiniteRack read_rack(std::istream& is) {
  std::string line, kw;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') break;
  }
  std::istringstream head(line);
  std::size_t n = 0;
  std::string flag;
  if (!(head >> kw >> n) || kw != "rack") throw std::invalid_argument("malformed rack header: " + line);
  head >> flag;
  if (!flag.empty() && flag != "quandle") throw std::invalid_argument("unknown rack flag: " + flag);
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (auto& row : t)
    for (auto& x : row)
      if (!(is >> x)) throw std::invalid_argument("rack table truncated");
  return make_rack(std::move(t), flag == "quandle", "file");
}

inline void write_rack(std::ostream& os, const FiniteRack& r) {
  os << "rack " << r.n << (r.quandle ? " quandle" : "") << '\n';
  for (const auto& row : r.table) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
}

}  // namespace shelf

#endif  // SHELF_RACK_HPP
