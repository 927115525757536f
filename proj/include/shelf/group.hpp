// Finite groups given by Cayley tables.

#ifndef SHELF_GROUP_HPP
#define SHELF_GROUP_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace shelf {

struct CayleyTable {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = gh
  std::vector<std::string> labels;
  std::size_t identity = 0;

  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }

  std::size_t inverse(std::size_t g) const {
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == identity) return h;
    throw std::logic_error("element without inverse");
  }
};

/// Validates closure, associativity, identity and inverses; fills `identity`.
inline CayleyTable make_group(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {}) {
  CayleyTable g;
  g.n = table.size();
  if (g.n == 0) throw std::invalid_argument("table not a group: empty");
  for (const auto& row : table) {
    if (row.size() != g.n) throw std::invalid_argument("table not a group: not square");
    for (auto x : row)
      if (x >= g.n) throw std::invalid_argument("table not a group: entry out of range");
  }
  g.table = std::move(table);
  if (labels.empty())
    for (std::size_t i = 0; i < g.n; ++i) labels.push_back("g" + std::to_string(i));
  if (labels.size() != g.n) throw std::invalid_argument("label count does not match group order");
  g.labels = std::move(labels);

  bool found = false;
  for (std::size_t e = 0; e < g.n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < g.n && ok; ++x) ok = g.table[e][x] == x && g.table[x][e] == x;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("table not a group: no identity");
  for (std::size_t x = 0; x < g.n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < g.n; ++y) has_inverse |= g.table[x][y] == g.identity && g.table[y][x] == g.identity;
    if (!has_inverse) throw std::invalid_argument("table not a group: missing inverse");
  }
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y)
      for (std::size_t z = 0; z < g.n; ++z)
        if (g.table[g.table[x][y]][z] != g.table[x][g.table[y][z]])
          throw std::invalid_argument("table not a group: not associative");
  return g;
}

inline CayleyTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return make_group(std::move(t), std::move(labels));
}

/// S3 as permutations of {0,1,2} in lexicographic order, (gh)(x) = g(h(x)).
inline CayleyTable symmetric_group_s3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<std::size_t, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < 6; ++a) {
    labels.push_back("p" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(c);
    }
  }
  return make_group(std::move(t), std::move(labels));
}

}  // namespace shelf

#endif  // SHELF_GROUP_HPP
