// Self-distributive, comultiplication-compatible maps on the two
// 2-dimensional cocommutative coalgebras: the group-like one (basis x, y with
// Δz = z⊗z) and the trigonometric one (basis a, b).

#ifndef SHELF_CLASSIFY2D_HPP
#define SHELF_CLASSIFY2D_HPP

#include <array>
#include <string>
#include <vector>

#include "shelf/shelfmap.hpp"

namespace shelf {

/// Value of q on a pair of group-like basis vectors.
enum class GValue { Zero, X, Y };

inline char gvalue_char(GValue v) { return v == GValue::Zero ? '0' : v == GValue::X ? 'x' : 'y'; }

/// q(x⊗x), q(x⊗y), q(y⊗x), q(y⊗y)
struct GrouplikeCandidate {
  std::array<GValue, 4> values{};
  bool sd = false;
  bool compatible = false;
  bool strict_counit = false;

  bool solution() const { return sd && compatible; }
  bool all_nonzero() const {
    for (auto v : values)
      if (v == GValue::Zero) return false;
    return true;
  }
  std::string code() const {
    std::string s;
    for (auto v : values) s += gvalue_char(v);
    return s;
  }
  friend bool operator==(const GrouplikeCandidate& a, const GrouplikeCandidate& b) { return a.values == b.values; }
};

/// The relabelling x ↔ y applied to a candidate.
inline std::array<GValue, 4> swap_xy(const std::array<GValue, 4>& v) {
  auto sw = [](GValue g) { return g == GValue::X ? GValue::Y : g == GValue::Y ? GValue::X : GValue::Zero; };
  return {sw(v[3]), sw(v[2]), sw(v[1]), sw(v[0])};
}

template <FieldScalar F>
LinearMap<F> grouplike_q(const std::array<GValue, 4>& values, const std::shared_ptr<const BasedSpace>& sp) {
  MapBuilder<F> b(sp, 2, 1);
  F one = F::from_int(1, sp->field);
  for (std::size_t k = 0; k < 4; ++k)
    if (values[k] != GValue::Zero) b.add(k, values[k] == GValue::X ? 0 : 1, one);
  return b.build("q");
}

/// All 3⁴ candidates in lexicographic order (0 < x < y, q(x⊗x) most
/// significant) with their checks filled in.
template <FieldScalar F = Rational>
std::vector<GrouplikeCandidate> enumerate_grouplike(FieldSpec field = FieldSpec::rationals()) {
  auto c = build_setlike<F>({"x", "y"}, field);
  std::vector<GrouplikeCandidate> out(81);
  for (std::size_t n = 0; n < 81; ++n) {
    auto& cand = out[n];
    std::size_t r = n;
    for (int k = 3; k >= 0; --k) {
      cand.values[k] = static_cast<GValue>(r % 3);
      r /= 3;
    }
    auto q = grouplike_q<F>(cand.values, c.space_ptr());
    cand.sd = check_self_distributive(q, c);
    cand.compatible = check_comult_compatible(q, c);
    cand.strict_counit = check_counit_behavior(q, c).strict;
  }
  return out;
}

/// Columns of the published grouplike classification table as printed, read top to bottom
/// (q(x⊗x), q(x⊗y), q(y⊗x), q(y⊗y)); duplicates kept.
inline std::vector<std::string> printed_grouplike_columns() {
  return {"000x", "000y", "00x0", "00xx", "0x0y", "0y00", "x000", "x00y", "x000", "x0yx", "xxxy",
          "xxxx", "xxyy", "xxyy", "xyxy", "yyyy", "y000", "yxyy", "yy00", "yyxx", "yyyy", "0000"};
}

struct MixedProbeResult {
  std::size_t tried = 0;
  std::size_t compatible = 0;  // expected 0
};

/// Puts γ₁x + γ₂y with (γ₁, γ₂) ∉ {(0,0), (1,0), (0,1)}, γᵢ ∈ [−bound, bound],
/// at each input pair (other values drawn from {0, x, y}) and counts the
/// candidates that pass comultiplication compatibility.
template <FieldScalar F = Rational>
MixedProbeResult mixed_value_probe(int bound = 2, FieldSpec field = FieldSpec::rationals()) {
  auto c = build_setlike<F>({"x", "y"}, field);
  const auto& sp = c.space_ptr();
  MixedProbeResult res;
  for (std::size_t pos = 0; pos < 4; ++pos)
    for (int g1 = -bound; g1 <= bound; ++g1)
      for (int g2 = -bound; g2 <= bound; ++g2) {
        if ((g1 == 0 && g2 == 0) || (g1 == 1 && g2 == 0) || (g1 == 0 && g2 == 1)) continue;
        for (std::size_t rest = 0; rest < 27; ++rest) {
          MapBuilder<F> b(sp, 2, 1);
          std::size_t r = rest;
          for (std::size_t k = 0; k < 4; ++k) {
            if (k == pos) {
              b.add(k, 0, F::from_int(g1, field));
              b.add(k, 1, F::from_int(g2, field));
              continue;
            }
            auto v = r % 3;
            r /= 3;
            if (v != 0) b.add(k, v - 1, F::from_int(1, field));
          }
          ++res.tried;
          if (check_comult_compatible(b.build(), c)) ++res.compatible;
        }
      }
  return res;
}

/// One row (α₁..α₄ | β₁..β₄) with q(a⊗a) = α₁a + β₁b, q(a⊗b) = α₂a + β₂b,
/// q(b⊗a) = α₃a + β₃b, q(b⊗b) = α₄a + β₄b; entries are ℚ(i) literals.
struct TrigRow {
  std::array<std::string, 4> alpha, beta;
};

inline std::vector<TrigRow> trig_rows() {
  return {
      {{"1", "0", "0", "0"}, {"0", "0", "-1", "0"}},
      {{"0", "0", "0", "0"}, {"0", "0", "0", "0"}},
      {{"1/2", "-i/2", "0", "0"}, {"0", "0", "1/2", "-i/2"}},
      {{"1/2", "i/2", "0", "0"}, {"0", "0", "1/2", "i/2"}},
      {{"1", "0", "0", "0"}, {"0", "0", "1", "0"}},
      {{"1/2", "0", "0", "-1/2"}, {"0", "1/2", "1/2", "0"}},
      {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}},
      {{"1/4", "-i/4", "-i/4", "-1/4"}, {"-i/4", "-1/4", "-1/4", "i/4"}},
      {{"1/4", "i/4", "-i/4", "1/4"}, {"-i/4", "1/4", "-1/4", "-i/4"}},
      {{"1/4", "i/4", "i/4", "-1/4"}, {"-i/4", "1/4", "1/4", "i/4"}},
      {{"1/4", "i/4", "i/4", "-1/4"}, {"i/4", "-1/4", "-1/4", "-i/4"}},
      {{"1/4", "-i/4", "i/4", "1/4"}, {"i/4", "1/4", "-1/4", "i/4"}},
      {{"1/4", "-i/4", "-i/4", "-1/4"}, {"i/4", "1/4", "1/4", "-i/4"}},
      {{"1", "0", "0", "0"}, {"-i/2", "-1/2", "1/2", "i/2"}},
      {{"1/2", "0", "-i/2", "0"}, {"-i/2", "0", "-1/2", "0"}},
      {{"1", "0", "0", "0"}, {"-i/2", "1/2", "1/2", "-i/2"}},
      {{"1", "0", "0", "0"}, {"i/2", "-1/2", "1/2", "-i/2"}},
      {{"1/2", "0", "i/2", "0"}, {"i/2", "0", "-1/2", "0"}},
      {{"1", "0", "0", "0"}, {"i/2", "1/2", "1/2", "i/2"}},
      {{"1", "0", "0", "0"}, {"-i", "0", "0", "0"}},
      {{"1", "0", "0", "0"}, {"i", "0", "0", "0"}},
  };
}

template <FieldScalar F>
LinearMap<F> trig_q(const TrigRow& row, const std::shared_ptr<const BasedSpace>& sp) {
  MapBuilder<F> b(sp, 2, 1);
  for (std::size_t k = 0; k < 4; ++k) {
    b.add(k, 0, parse_scalar<F>(row.alpha[k], sp->field));
    b.add(k, 1, parse_scalar<F>(row.beta[k], sp->field));
  }
  return b.build("q");
}

struct TrigRowResult {
  bool sd = false;
  bool compatible = false;
  bool strict_counit = false;
  bool alpha_is_unit = false;  // α = (1, 0, 0, 0)

  bool passes() const { return sd && compatible && strict_counit == alpha_is_unit; }
};

inline std::vector<TrigRowResult> verify_trig_rows() {
  auto c = build_trig<GaussianRational>(FieldSpec::gaussian());
  std::vector<TrigRowResult> out;
  for (const auto& row : trig_rows()) {
    auto q = trig_q<GaussianRational>(row, c.space_ptr());
    TrigRowResult r;
    r.sd = check_self_distributive(q, c);
    r.compatible = check_comult_compatible(q, c);
    r.strict_counit = check_counit_behavior(q, c).strict;
    r.alpha_is_unit = row.alpha == std::array<std::string, 4>{"1", "0", "0", "0"};
    out.push_back(r);
  }
  return out;
}

}  // namespace shelf

#endif  // SHELF_CLASSIFY2D_HPP
