// Based vector spaces, linear maps between tensor powers, and layered
// composites of such maps.
//
// Tensor-basis convention: the basis vector e_{i1} (x) ... (x) e_{im} has index
// i1*d^(m-1) + ... + im, i.e. the leftmost factor is most significant.
// Maps compose right to left, as in (g f)(x) = g(f(x)).

#ifndef SHELF_TENSORSPACE_HPP
#define SHELF_TENSORSPACE_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shelf/exactfield.hpp"

namespace shelf {

using Index = std::uint64_t;

struct BasedSpace {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  FieldSpec field;

  BasedSpace() = default;
  BasedSpace(std::vector<std::string> basis_labels, FieldSpec f) : dim(basis_labels.size()), labels(std::move(basis_labels)), field(f) {
    if (dim == 0) throw std::invalid_argument("a based space needs at least one basis vector");
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("basis labels must be distinct");
  }

  static BasedSpace numbered(std::size_t d, FieldSpec f, const std::string& prefix = "e") {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < d; ++i) l.push_back(prefix + std::to_string(i));
    return {std::move(l), f};
  }

  bool compatible(const BasedSpace& o) const { return dim == o.dim && field == o.field; }
};

inline Index ipow(Index base, unsigned e) {
  Index r = 1;
  while (e--) r *= base;
  return r;
}

/// Digits of a tensor-basis index, most significant factor first.
inline std::vector<std::size_t> decode_index(Index idx, std::size_t dim, unsigned power) {
  std::vector<std::size_t> digits(power);
  for (unsigned k = power; k-- > 0;) {
    digits[k] = static_cast<std::size_t>(idx % dim);
    idx /= dim;
  }
  return digits;
}

inline Index encode_index(const std::vector<std::size_t>& digits, std::size_t dim) {
  Index idx = 0;
  for (auto d : digits) idx = idx * dim + d;
  return idx;
}

/// Sorted by index, no explicit zeros.
template <FieldScalar F>
using SparseVector = std::vector<std::pair<Index, F>>;

template <FieldScalar F>
class SparseAccumulator {
 public:
  void add(Index i, const F& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(i, v);
    if (!inserted) it->second += v;
  }
  void add(const SparseVector<F>& v, const F& scale) {
    for (const auto& [i, x] : v) add(i, x * scale);
  }
  SparseVector<F> take() {
    SparseVector<F> out;
    out.reserve(acc_.size());
    for (auto& [i, x] : acc_)
      if (!x.is_zero()) out.emplace_back(i, std::move(x));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    acc_.clear();
    return out;
  }

 private:
  std::unordered_map<Index, F> acc_;
};

/// Linear map X^(x)m -> X^(x)n stored as sparse columns (one per domain basis
/// vector). Copies share the immutable column storage.
template <FieldScalar F>
class LinearMap {
 public:
  using Column = SparseVector<F>;

  LinearMap() = default;
  LinearMap(std::shared_ptr<const BasedSpace> space, unsigned domain_power, unsigned codomain_power, std::vector<Column> columns,
            std::string name = {})
      : space_(std::move(space)), m_(domain_power), n_(codomain_power),
        cols_(std::make_shared<const std::vector<Column>>(std::move(columns))), name_(std::move(name)) {
    if (!space_) throw std::invalid_argument("linear map without a space");
    if (cols_->size() != domain_dim()) throw std::invalid_argument("column count does not match dim^m");
    Index rows = codomain_dim();
    for (const auto& c : *cols_)
      for (const auto& [r, v] : c)
        if (r >= rows) throw std::invalid_argument("row index out of range");
  }

  static LinearMap zero(std::shared_ptr<const BasedSpace> space, unsigned m, unsigned n) {
    Index cols = ipow(space->dim, m);
    return LinearMap(std::move(space), m, n, std::vector<Column>(cols));
  }

  static LinearMap identity(std::shared_ptr<const BasedSpace> space, unsigned k = 1) {
    Index n = ipow(space->dim, k);
    F one = F::from_int(1, space->field);
    std::vector<Column> cols(n);
    for (Index i = 0; i < n; ++i) cols[i] = {{i, one}};
    LinearMap id(std::move(space), k, k, std::move(cols), "1");
    id.identity_ = true;
    return id;
  }

  /// Swaps tensor factors `position` and `position + 1` (1-based) of X^(x)n.
  static LinearMap transposition(std::shared_ptr<const BasedSpace> space, unsigned n, unsigned position) {
    if (position < 1 || position >= n) throw std::out_of_range("transposition index out of range");
    return permutation(space, [&] {
      std::vector<unsigned> p(n);
      std::iota(p.begin(), p.end(), 0u);
      std::swap(p[position - 1], p[position]);
      return p;
    }());
  }

  /// Factor permutation: output factor k is input factor source[k].
  static LinearMap permutation(std::shared_ptr<const BasedSpace> space, const std::vector<unsigned>& source) {
    auto n = static_cast<unsigned>(source.size());
    Index total = ipow(space->dim, n);
    F one = F::from_int(1, space->field);
    std::vector<Column> cols(total);
    for (Index i = 0; i < total; ++i) {
      auto in = decode_index(i, space->dim, n);
      std::vector<std::size_t> out(n);
      for (unsigned k = 0; k < n; ++k) out[k] = in[source[k]];
      cols[i] = {{encode_index(out, space->dim), one}};
    }
    return LinearMap(std::move(space), n, n, std::move(cols));
  }

  const std::shared_ptr<const BasedSpace>& space_ptr() const { return space_; }
  const BasedSpace& space() const { return *space_; }
  std::size_t dim() const { return space_->dim; }
  unsigned domain_power() const { return m_; }
  unsigned codomain_power() const { return n_; }
  Index domain_dim() const { return ipow(space_->dim, m_); }
  Index codomain_dim() const { return ipow(space_->dim, n_); }
  const Column& column(Index c) const { return (*cols_)[c]; }
  const std::vector<Column>& columns() const { return *cols_; }
  bool is_identity() const { return identity_; }
  const std::string& name() const { return name_; }
  LinearMap named(std::string n) const {
    LinearMap r = *this;
    r.name_ = std::move(n);
    return r;
  }

  F entry(Index row, Index col) const {
    const auto& c = column(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, Index r) { return e.first < r; });
    return (it != c.end() && it->first == row) ? it->second : F{};
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : *cols_) n += c.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(cols_->begin(), cols_->end(), [](const Column& c) { return c.empty(); });
  }

  SparseVector<F> apply(const SparseVector<F>& v) const {
    if (identity_) return v;
    SparseAccumulator<F> acc;
    for (const auto& [i, x] : v) acc.add(column(i), x);
    return acc.take();
  }

  LinearMap operator-() const { return scaled(F::from_int(-1, space_->field)); }

  LinearMap scaled(const F& s) const {
    std::vector<Column> cols(cols_->size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (s.is_zero()) continue;
      for (const auto& [r, v] : column(c)) cols[c].emplace_back(r, v * s);
    }
    return LinearMap(space_, m_, n_, std::move(cols));
  }

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) { return combine(a, b, false); }
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) { return combine(a, b, true); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.space_->compatible(*b.space_) && *a.cols_ == *b.cols_;
  }

 private:
  static LinearMap combine(const LinearMap& a, const LinearMap& b, bool subtract) {
    require_same_shape(a, b);
    std::vector<Column> cols(a.cols_->size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& x = a.column(c);
      const auto& y = b.column(c);
      auto xi = x.begin(), yi = y.begin();
      while (xi != x.end() || yi != y.end()) {
        if (yi == y.end() || (xi != x.end() && xi->first < yi->first)) {
          cols[c].push_back(*xi++);
        } else if (xi == x.end() || yi->first < xi->first) {
          cols[c].emplace_back(yi->first, subtract ? -yi->second : yi->second);
          ++yi;
        } else {
          F s = subtract ? xi->second - yi->second : xi->second + yi->second;
          if (!s.is_zero()) cols[c].emplace_back(xi->first, std::move(s));
          ++xi;
          ++yi;
        }
      }
    }
    return LinearMap(a.space_, a.m_, a.n_, std::move(cols));
  }

  static void require_same_shape(const LinearMap& a, const LinearMap& b) {
    if (!a.space_->compatible(*b.space_)) throw std::invalid_argument("mismatched space");
    if (a.m_ != b.m_ || a.n_ != b.n_) throw std::invalid_argument("shape mismatch");
  }

  std::shared_ptr<const BasedSpace> space_;
  unsigned m_ = 0, n_ = 0;
  std::shared_ptr<const std::vector<Column>> cols_ = std::make_shared<const std::vector<Column>>();
  std::string name_;
  bool identity_ = false;
};

/// Accumulates entries (domain index, codomain index, value) into a map.
template <FieldScalar F>
class MapBuilder {
 public:
  MapBuilder(std::shared_ptr<const BasedSpace> space, unsigned m, unsigned n)
      : space_(std::move(space)), m_(m), n_(n), acc_(ipow(space_->dim, m)) {}

  void add(Index col, Index row, const F& v) { acc_.at(col).add(row, v); }
  void add(const std::vector<std::size_t>& in, const std::vector<std::size_t>& out, const F& v) {
    add(encode_index(in, space_->dim), encode_index(out, space_->dim), v);
  }
  void add_column(Index col, const SparseVector<F>& v, const F& scale) { acc_.at(col).add(v, scale); }

  LinearMap<F> build(std::string name = {}) {
    std::vector<SparseVector<F>> cols;
    cols.reserve(acc_.size());
    for (auto& a : acc_) cols.push_back(a.take());
    return LinearMap<F>(space_, m_, n_, std::move(cols), std::move(name));
  }

 private:
  std::shared_ptr<const BasedSpace> space_;
  unsigned m_, n_;
  std::vector<SparseAccumulator<F>> acc_;
};

template <FieldScalar F>
LinearMap<F> compose(const LinearMap<F>& outer, const LinearMap<F>& inner) {
  if (!outer.space().compatible(inner.space())) throw std::invalid_argument("mismatched space");
  if (inner.codomain_power() != outer.domain_power()) throw std::invalid_argument("shape mismatch in composition");
  if (outer.is_identity()) return inner;
  if (inner.is_identity()) return outer;
  std::vector<SparseVector<F>> cols(inner.domain_dim());
  for (Index c = 0; c < cols.size(); ++c) cols[c] = outer.apply(inner.column(c));
  return LinearMap<F>(inner.space_ptr(), inner.domain_power(), outer.codomain_power(), std::move(cols));
}

namespace detail {

template <FieldScalar F>
SparseVector<F> tensor_vectors(const SparseVector<F>& a, const SparseVector<F>& b, Index b_dim) {
  SparseVector<F> out;
  out.reserve(a.size() * b.size());
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.emplace_back(i * b_dim + j, x * y);
  return out;
}

}  // namespace detail

template <FieldScalar F>
LinearMap<F> kron(const LinearMap<F>& a, const LinearMap<F>& b) {
  if (!a.space().compatible(b.space())) throw std::invalid_argument("mismatched space");
  if (a.is_identity() && b.is_identity())
    return LinearMap<F>::identity(a.space_ptr(), a.domain_power() + b.domain_power());
  Index bd = b.domain_dim(), bc = b.codomain_dim();
  std::vector<SparseVector<F>> cols(a.domain_dim() * bd);
  for (Index i = 0; i < a.domain_dim(); ++i)
    for (Index j = 0; j < bd; ++j) cols[i * bd + j] = detail::tensor_vectors(a.column(i), b.column(j), bc);
  return LinearMap<F>(a.space_ptr(), a.domain_power() + b.domain_power(), a.codomain_power() + b.codomain_power(),
                      std::move(cols));
}

template <FieldScalar F>
LinearMap<F> kron(std::initializer_list<LinearMap<F>> maps) {
  auto it = maps.begin();
  LinearMap<F> r = *it++;
  for (; it != maps.end(); ++it) r = kron(r, *it);
  return r;
}

/// One horizontal slice of a string diagram: a tensor product of blocks.
template <FieldScalar F>
class Layer {
 public:
  Layer(std::initializer_list<LinearMap<F>> blocks) : blocks_(blocks) { init(); }
  explicit Layer(std::vector<LinearMap<F>> blocks) : blocks_(std::move(blocks)) { init(); }

  unsigned domain_power() const { return in_; }
  unsigned codomain_power() const { return out_; }
  const std::vector<LinearMap<F>>& blocks() const { return blocks_; }

  SparseVector<F> apply(const SparseVector<F>& v) const {
    if (blocks_.size() == 1) return blocks_.front().apply(v);
    SparseAccumulator<F> acc;
    std::size_t d = blocks_.front().dim();
    for (const auto& [idx, x] : v) {
      // split the input index into block inputs, most significant block first
      std::vector<Index> parts(blocks_.size());
      Index rest = idx;
      for (std::size_t b = blocks_.size(); b-- > 0;) {
        Index bd = ipow(d, blocks_[b].domain_power());
        parts[b] = rest % bd;
        rest /= bd;
      }
      SparseVector<F> cur{{0, x}};
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const auto& blk = blocks_[b];
        Index od = ipow(d, blk.codomain_power());
        if (blk.is_identity()) {
          for (auto& [i, y] : cur) i = i * od + parts[b];
        } else {
          cur = detail::tensor_vectors(cur, blk.column(parts[b]), od);
        }
        if (cur.empty()) break;
      }
      for (auto& [i, y] : cur) acc.add(i, y);
    }
    return acc.take();
  }

 private:
  void init() {
    if (blocks_.empty()) throw std::invalid_argument("empty layer");
    for (const auto& b : blocks_) {
      if (!b.space().compatible(blocks_.front().space())) throw std::invalid_argument("mismatched space");
      in_ += b.domain_power();
      out_ += b.codomain_power();
    }
  }

  std::vector<LinearMap<F>> blocks_;
  unsigned in_ = 0, out_ = 0;
};

/// A composite of layers written outermost first, as in q(q (x) 1)(1 (x) tau).
/// Evaluated lazily on vectors so that large intermediate tensor powers never
/// become matrices.
template <FieldScalar F>
class Composite {
 public:
  Composite(std::initializer_list<Layer<F>> layers) : layers_(layers) { check(); }
  explicit Composite(std::vector<Layer<F>> layers) : layers_(std::move(layers)) { check(); }

  unsigned domain_power() const { return layers_.back().domain_power(); }
  unsigned codomain_power() const { return layers_.front().codomain_power(); }

  SparseVector<F> apply(SparseVector<F> v) const {
    for (auto it = layers_.rbegin(); it != layers_.rend() && !v.empty(); ++it) v = it->apply(v);
    return v;
  }

  LinearMap<F> materialize() const {
    const auto& sp = layers_.front().blocks().front().space_ptr();
    F one = F::from_int(1, sp->field);
    Index n = ipow(sp->dim, domain_power());
    std::vector<SparseVector<F>> cols(n);
    for (Index c = 0; c < n; ++c) cols[c] = apply({{c, one}});
    return LinearMap<F>(sp, domain_power(), codomain_power(), std::move(cols));
  }

 private:
  void check() const {
    if (layers_.empty()) throw std::invalid_argument("empty composite");
    for (std::size_t k = 0; k + 1 < layers_.size(); ++k)
      if (layers_[k].domain_power() != layers_[k + 1].codomain_power())
        throw std::invalid_argument("shape mismatch between composite layers");
  }

  std::vector<Layer<F>> layers_;
};

// ---------------------------------------------------------------------------
// Linear-map text format:
//   map <name> : dim<d>^<m> -> dim<d>^<n>
//   i1 ... im -> j1 ... jn <coeff>
// one line per nonzero entry, basis indices 0-based.

template <FieldScalar F>
void write_map(std::ostream& os, const LinearMap<F>& f, const std::string& name) {
  auto d = f.dim();
  os << "map " << name << " : dim" << d << '^' << f.domain_power() << " -> dim" << d << '^' << f.codomain_power() << '\n';
  for (Index c = 0; c < f.domain_dim(); ++c) {
    for (const auto& [r, v] : f.column(c)) {
      for (auto i : decode_index(c, d, f.domain_power())) os << i << ' ';
      os << "->";
      for (auto j : decode_index(r, d, f.codomain_power())) os << ' ' << j;
      os << ' ' << v.to_string() << '\n';
    }
  }
}

struct MapHeader {
  std::string name;
  std::size_t dim = 0;
  unsigned domain_power = 0, codomain_power = 0;
};

inline MapHeader parse_map_header(const std::string& line) {
  std::istringstream is(line);
  std::string kw, name, colon, dom, arrow, cod;
  is >> kw >> name >> colon >> dom >> arrow >> cod;
  auto parse_side = [&](const std::string& s, std::size_t& d, unsigned& p) {
    auto caret = s.find('^');
    if (!s.starts_with("dim") || caret == std::string::npos) throw std::invalid_argument("malformed map header: " + line);
    d = std::stoul(s.substr(3, caret - 3));
    p = static_cast<unsigned>(std::stoul(s.substr(caret + 1)));
  };
  if (kw != "map" || colon != ":" || arrow != "->") throw std::invalid_argument("malformed map header: " + line);
  MapHeader h;
  h.name = name;
  std::size_t d2 = 0;
  parse_side(dom, h.dim, h.domain_power);
  parse_side(cod, d2, h.codomain_power);
  if (d2 != h.dim) throw std::invalid_argument("map header dimensions disagree: " + line);
  return h;
}

/// Parses one entry line of a map block into the builder.
template <FieldScalar F>
void parse_map_entry(const std::string& line, const MapHeader& h, MapBuilder<F>& builder, const FieldSpec& field) {
  auto arrow = line.find("->");
  if (arrow == std::string::npos) throw std::invalid_argument("malformed map entry: " + line);
  std::istringstream lhs(line.substr(0, arrow)), rhs(line.substr(arrow + 2));
  std::vector<std::size_t> in, out;
  std::string tok;
  while (lhs >> tok) in.push_back(std::stoul(tok));
  std::vector<std::string> rtoks;
  while (rhs >> tok) rtoks.push_back(tok);
  if (in.size() != h.domain_power || rtoks.size() != h.codomain_power + 1)
    throw std::invalid_argument("map entry arity mismatch: " + line);
  for (std::size_t k = 0; k < h.codomain_power; ++k) out.push_back(std::stoul(rtoks[k]));
  for (auto i : in)
    if (i >= h.dim) throw std::invalid_argument("basis index out of range: " + line);
  for (auto j : out)
    if (j >= h.dim) throw std::invalid_argument("basis index out of range: " + line);
  builder.add(in, out, parse_scalar<F>(rtoks.back(), field));
}

/// Reads a single map block; the space is supplied by the caller.
template <FieldScalar F>
LinearMap<F> read_map(std::istream& is, std::shared_ptr<const BasedSpace> space, std::string* name_out = nullptr) {
  std::string line;
  while (std::getline(is, line) && detail::trim(line).empty()) {}
  MapHeader h = parse_map_header(line);
  if (h.dim != space->dim) throw std::invalid_argument("map dimension does not match space");
  MapBuilder<F> b(space, h.domain_power, h.codomain_power);
  while (is.peek() != EOF) {
    auto pos = is.tellg();
    if (!std::getline(is, line)) break;
    auto t = detail::trim(line);
    if (t.empty() || t.starts_with("#")) continue;
    if (t.starts_with("map ")) {
      is.seekg(pos);
      break;
    }
    parse_map_entry(line, h, b, space->field);
  }
  if (name_out) *name_out = h.name;
  return b.build(h.name);
}

}  // namespace shelf

#endif  // SHELF_TENSORSPACE_HPP
