// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shelf/classify2d.hpp"
#include "shelf/fixtures.hpp"
#include "shelf/hochschild.hpp"
#include "shelf/liecoh.hpp"
#include "shelf/quandlecoh.hpp"
#include "shelf/shelfcohomology.hpp"
#include "shelf/yangbaxter.hpp"

using namespace shelf;

namespace {

constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

// Magma on {0, x, y} with 0 absorbing; see the classify2d tests.
std::set<std::string> setlevel_grouplike_solutions() {
  std::set<std::string> out;
  const char names[3] = {'0', 'x', 'y'};
  for (int n = 0; n < 81; ++n) {
    int t[2][2] = {{n / 27 % 3, n / 9 % 3}, {n / 3 % 3, n % 3}};
    auto op = [&](int s, int r) { return (s == 0 || r == 0) ? 0 : t[s - 1][r - 1]; };
    bool ok = true;
    for (int s = 1; s <= 2; ++s)
      for (int a = 1; a <= 2; ++a)
        for (int r = 1; r <= 2; ++r) ok = ok && op(op(s, a), r) == op(op(s, r), op(a, r));
    if (ok) out.insert({names[t[0][0]], names[t[0][1]], names[t[1][0]], names[t[1][1]]});
  }
  return out;
}

Outcome grouplike_classification() {
  auto all = enumerate_grouplike();
  std::set<std::string> sol, shelves, nonzero;
  for (const auto& c : all) {
    if (c.solution()) sol.insert(c.code());
    if (c.solution() && c.strict_counit) shelves.insert(c.code());
    if (c.solution() && c.all_nonzero()) nonzero.insert(c.code());
  }
  auto printed = printed_grouplike_columns();
  std::set<std::string> distinct(printed.begin(), printed.end()), extra, missing;
  for (const auto& s : distinct)
    if (!sol.count(s)) extra.insert(s);
  for (const auto& s : sol)
    if (!distinct.count(s)) missing.insert(s);
  // x0yx is a transcription defect of the printed list; its absence is what the
  // brute force and the x↔y symmetry both require.
  bool cross = extra == std::set<std::string>{"x0yx"} && missing == std::set<std::string>{"x0y0", "xxyx", "xyyy"};
  bool ok = sol.size() == 21 && sol == setlevel_grouplike_solutions() && shelves == nonzero && cross;
  std::ostringstream d;
  d << "solutions=" << sol.size() << " setlevel_oracle_agrees=" << yn(sol == setlevel_grouplike_solutions())
    << " shelves=" << shelves.size() << " shelves==all_nonzero=" << yn(shelves == nonzero) << " printed_distinct="
    << distinct.size() << " printed_non_solution=x0yx(pinned) missing_from_print=x0y0,xxyx,xyyy";
  return {ok, d.str()};
}

Outcome trig_table() {
  auto res = verify_trig_rows();
  std::size_t pass = 0, units = 0;
  for (const auto& r : res) {
    pass += r.passes();
    units += r.alpha_is_unit;
  }
  std::ostringstream d;
  d << pass << "/" << res.size() << " rows pass; strict counit rows = alpha (1,0,0,0) rows = " << units;
  return {res.size() == 21 && pass == 21, d.str()};
}

Outcome rack_shelves() {
  std::vector<FiniteRack> racks = {dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(5), dihedral_quandle(6),
                                   conjugation_quandle(symmetric_group_s3())};
  std::size_t checked = 0;
  bool ok = true;
  auto check = [&]<class F>(const FiniteRack& r, FieldSpec f) {
    auto s = q_from_rack<F>(r, f);
    ok = ok && s.comult_compatible && !s.counit.strict && s.counit.weak.value_or(false);
    ++checked;
  };
  for (const auto& r : racks) {
    check.template operator()<Rational>(r, FieldSpec::rationals());
    check.template operator()<ModP>(r, FieldSpec::prime(5));
  }
  return {ok, std::to_string(checked) + " rack/field pairs: SD, compatible, strict counit fails, weak counit holds"};
}

Outcome lie_shelves() {
  bool ok = true;
  std::string d;
  auto check = [&]<class F>(const LieAlgebra<F>& g, const std::string& name) {
    auto s = q_from_lie(g);  // throws unless SD
    bool good = s.comult_compatible && s.counit.strict && s.coalgebra.cocommutative();
    ok = ok && good;
    d += name + "=" + (good ? "ok " : "fail ");
  };
  check(sl2_type<Rational>(FieldSpec::rationals()), "N(sl2)/Q");
  check(witt<ModP>(5), "N(W5)/F5");
  check(witt<ModP>(7), "N(W7)/F7");
  return {ok, d + "(SD, compatible, strict counit, cocommutative)"};
}

Outcome hopf_adjoint() {
  auto h = build_group_hopf<Rational>(symmetric_group_s3(), FieldSpec::rationals());
  auto s = q_adjoint(h);
  auto id = check_adjoint_identities(s.q, h);
  bool ybe = check_ybe(r_from_q(s));
  std::ostringstream d;
  d << "k[S3]/Q: SD=yes eq1=" << yn(id.eq1) << " eq2=" << yn(id.eq2) << " YBE=" << yn(ybe);
  return {id.eq1 && id.eq2 && ybe, d.str()};
}

Outcome ybe_and_closed_form() {
  auto w3 = q_from_rack<ModP>(dihedral_quandle(3), FieldSpec::prime(3));
  auto w4 = q_from_rack<ModP>(dihedral_quandle(4), FieldSpec::prime(3));
  auto g = witt<ModP>(5);
  auto n5 = q_from_lie(g);
  auto r5 = r_from_q(n5);
  bool y3 = check_ybe(r_from_q(w3)), y4 = check_ybe(r_from_q(w4)), y5 = check_ybe(r5);
  bool closed = r5.R == lie_r_closed_form(g, n5.space_ptr());
  auto sl = sl2_type<Rational>(FieldSpec::rationals());
  auto nsl = q_from_lie(sl);
  bool closed_sl = r_from_q(nsl).R == lie_r_closed_form(sl, nsl.space_ptr());
  std::ostringstream d;
  d << "YBE W(R3)/F3=" << yn(y3) << " W(R4)/F3=" << yn(y4) << " N(W5)/F5=" << yn(y5)
    << " closed form entrywise N(W5)=" << yn(closed) << " N(sl2)=" << yn(closed_sl);
  return {y3 && y4 && y5 && closed && closed_sl, d.str()};
}

Outcome induced_q_round_trip() {
  std::mt19937_64 rng(kSeed);
  auto f7 = FieldSpec::prime(7);
  std::vector<std::pair<std::string, Coalgebra<ModP>>> cs = {{"W(R3)/F7", build_augmented<ModP>(3, f7)},
                                                             {"N(W7)/F7", build_lie_N(witt<ModP>(7))},
                                                             {"setlike2/F7", build_setlike<ModP>({"x", "y"}, f7)}};
  std::size_t total = 0, good = 0;
  for (const auto& [name, c] : cs)
    for (int t = 0; t < 100; ++t, ++total) {
      auto q = random_map<ModP>(c.space_ptr(), 2, 1, rng);
      good += q_from_r(induced_r(q, c.delta()), c) == q;
    }
  auto trig = build_trig<GaussianRational>(FieldSpec::gaussian());
  for (int t = 0; t < 100; ++t, ++total) {
    auto q = random_map<GaussianRational>(trig.space_ptr(), 2, 1, rng);
    good += q_from_r(induced_r(q, trig.delta()), trig) == q;
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " round trips over 4 fixtures"};
}

template <FieldScalar F>
std::size_t d2d1_zero_count(const ShelfStructure<F>& s, int trials, std::mt19937_64& rng) {
  ShelfDifferentials<F> d(s);
  std::size_t good = 0;
  for (int t = 0; t < trials; ++t) {
    auto [e1, e2] = d.D1(random_map<F>(s.space_ptr(), 1, 1, rng));
    auto xi = d.D2(e1, e2);
    good += xi.xi1.is_zero() && xi.xi2.is_zero() && xi.xi3.is_zero();
  }
  return good;
}

Outcome d2d1() {
  std::mt19937_64 rng(kSeed);
  auto a = d2d1_zero_count(q_from_rack<ModP>(dihedral_quandle(3), FieldSpec::prime(7)), 100, rng);
  auto b = d2d1_zero_count(q_from_lie(sl2_type<Rational>(FieldSpec::rationals())), 100, rng);
  std::ostringstream d;
  d << "W(R3)/F7 " << a << "/100, N(sl2)/Q " << b << "/100 exact zero";
  return {a == 100 && b == 100, d.str()};
}

Outcome d3d2() {
  auto s = q_from_rack<ModP>(dihedral_quandle(3), FieldSpec::prime(5));
  RestrictedComplex<ModP> st(s, D2Target::Stacked), col(s, D2Target::Column);
  auto a2 = st.D2_matrix(), a3 = st.D3_matrix();
  std::size_t st_nonzero = 0;
  for (const auto& c : multiply(a3, a2)) st_nonzero += !c.empty();
  auto c2 = col.D2_matrix(), c3 = col.D3_matrix();
  std::size_t col_nonzero = 0;
  for (const auto& c : multiply(c3, c2)) col_nonzero += !c.empty();
  std::ostringstream d;
  d << "stacked " << a2.source_dim << "->" << a2.target_dim << "->" << a3.target_dim << ": nonzero product columns "
    << st_nonzero << "; column-only " << c2.source_dim << "->" << c2.target_dim << "->" << c3.target_dim
    << " (not a complex): " << col_nonzero << " nonzero columns";
  return {st_nonzero == 0 && a2.source_dim == 64, d.str()};
}

Outcome witt_central_extension() {
  auto ext = central_extend(witt<ModP>(5), virasoro_cocycle<ModP>(5));
  auto s = q_from_lie(ext.algebra);
  RestrictedComplex<ModP> col(s, D2Target::Column), st(s, D2Target::Stacked);
  auto dc = cohomology_dim(col, 2), ds = cohomology_dim(st, 2);
  auto m1 = col.D1_matrix(), m2 = col.D2_matrix();
  std::ostringstream d;
  d << "column D1 " << m1.source_dim << "->" << m1.target_dim << ", D2 " << m2.source_dim << "->" << m2.target_dim
    << ": z=" << dc.z << " b=" << dc.b << " h=" << dc.h << " (regression h=6); stacked h=" << ds.h;
  return {dc.h >= 1 && dc.h == 6 && m2.source_dim == 343 && m2.target_dim == 2401, d.str()};
}

Outcome quandle_degree2() {
  auto f = FieldSpec::prime(2);
  auto r = dihedral_quandle(4);
  auto dims = quandle_cohomology_dim<ModP>(r, 2, f);
  auto phi = nontrivial_cocycle<ModP>(r, 2, f);
  if (!phi) return {false, "no nontrivial 2-cocycle found"};
  auto s = q_from_rack<ModP>(r, f);
  RestrictedComplex<ModP> cx(s, D2Target::Column);
  const auto& d = cx.differentials();
  auto hat = lift_2cocycle(*phi, r, s.space_ptr());
  bool cocycle = d.d21(hat, d.zero(1, 2)).is_zero();
  bool cob = cocycle && is_coboundary(make_cochain(2, 1, hat), cx);
  std::ostringstream o;
  o << "H2_Q(R4;F2) z=" << dims.z << " b=" << dims.b << " h=" << dims.h << " (regression h=4); d21(phi_hat,0)=0: "
    << yn(cocycle) << "; coboundary: " << yn(cob);
  return {dims.h == 4 && cocycle && !cob, o.str()};
}

Outcome quandle_degree3() {
  auto f = FieldSpec::prime(3);
  auto r = dihedral_quandle(3);
  auto dims = quandle_cohomology_dim<ModP>(r, 3, f);
  auto th = nontrivial_cocycle<ModP>(r, 3, f);
  if (!th) return {false, "no nontrivial 3-cocycle found"};
  auto s = q_from_rack<ModP>(r, f);
  RestrictedComplex<ModP> cx(s, D2Target::Stacked);
  const auto& d = cx.differentials();
  auto hat = lift_3cocycle(*th, r, s.space_ptr());
  bool cocycle = d.d31({hat, d.zero(2, 2), d.zero(1, 3)}).is_zero();
  bool cob = cocycle && is_coboundary(make_cochain(3, 1, hat), cx);
  std::ostringstream o;
  o << "H3_Q(R3;F3) z=" << dims.z << " b=" << dims.b << " h=" << dims.h << " (regression h=1); d31(theta_hat,0,0)=0: "
    << yn(cocycle) << "; coboundary (stacked): " << yn(cob);
  return {dims.h == 1 && cocycle && !cob, o.str()};
}

Outcome lie_pipeline() {
  auto g = witt<ModP>(5);
  auto vir = virasoro_cocycle<ModP>(5);
  bool vir_ok = lie_cocycle_check(vir, g);
  auto ext = central_extend(g, vir);
  bool psi_ok = lie_cocycle_check(ext.psi, ext.algebra);
  auto s = q_from_lie(ext.algebra);
  RestrictedComplex<ModP> cx(s, D2Target::Column);
  const auto& d = cx.differentials();
  auto hat = lift_psi_hat(ext.psi, ext.algebra, s.space_ptr());
  bool d21 = d.d21(hat, d.zero(1, 2)).is_zero(), d22 = d.d22(hat, d.zero(1, 2)).is_zero();
  bool cob = d21 && is_coboundary(make_cochain(2, 1, hat), cx);
  auto zeta = nontrivial_lie_cocycle(g, 3, Coefficients::Adjoint);
  bool zeta_ok = false;
  if (zeta) {
    auto n = q_from_lie(g);
    ShelfDifferentials<ModP> dn(n);
    auto zh = lift_zeta_hat(*zeta, g, n.space_ptr());
    zeta_ok = dn.d31({zh, dn.zero(2, 2), dn.zero(1, 3)}).is_zero();
  }
  std::ostringstream o;
  o << "Virasoro on W5 cocycle=" << yn(vir_ok) << "; psi' adjoint cocycle=" << yn(psi_ok) << "; psi_hat d21=0 "
    << yn(d21) << " d22=0 " << yn(d22) << " coboundary=" << yn(cob) << "; zeta (W5, adjoint, non-coboundary) found="
    << yn(zeta.has_value()) << " d31(zeta_hat,0,0)=0 " << yn(zeta_ok);
  return {vir_ok && psi_ok && d21 && d22 && !cob && zeta_ok, o.str()};
}

Outcome hochschild() {
  std::mt19937_64 rng(kSeed);
  std::size_t good = 0, total = 0;
  for (std::size_t n : {2, 3}) {
    auto b = Bialgebra<Rational>::from_hopf(build_group_hopf<Rational>(cyclic_group(n), FieldSpec::rationals()));
    for (int t = 0; t < 50; ++t, ++total) {
      auto f = random_map<Rational>(b.space_ptr(), 1, 1, rng);
      auto h = hochschild_d(f, b), c = cohochschild_d(f, b);
      good += hochschild_d(h, b).is_zero() && cohochschild_d(c, b).is_zero() && hochschild_d(c, b) == cohochschild_d(h, b);
    }
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " on k[Z2], k[Z3] over Q"};
}

Outcome deformation() {
  auto s = q_from_rack<ModP>(dihedral_quandle(3), FieldSpec::prime(5));
  ShelfDifferentials<ModP> d(s);
  std::mt19937_64 rng(kSeed);
  std::size_t agree = 0, pos = 0, neg = 0;
  const int total = 50;
  for (int t = 0; t < total; ++t) {
    LinearMap<ModP> q1, D1;
    if (t % 2 == 0) {
      // coboundaries D1 f are positive instances
      auto e = d.D1(random_map<ModP>(s.space_ptr(), 1, 1, rng));
      q1 = e.first;
      D1 = e.second;
    } else {
      q1 = random_map<ModP>(s.space_ptr(), 2, 1, rng);
      D1 = t % 4 == 1 ? d.zero(1, 2) : random_map<ModP>(s.space_ptr(), 1, 2, rng);
    }
    auto r = check_deformation(s, q1, D1);
    agree += r.agree();
    (r.is_2cocycle ? pos : neg) += 1;
  }
  std::ostringstream o;
  o << agree << "/" << total << " agree; positives " << pos << ", negatives " << neg;
  return {agree == total && pos > 0 && neg > 0, o.str()};
}

Outcome trivial_quandle_sign() {
  auto f = FieldSpec::rationals();
  auto c = build_setlike<Rational>({"x", "y", "z"}, f);
  auto s = make_shelf(c, setlike_rack_q<Rational>(trivial_quandle(3), c.space_ptr()), Provenance::Rack);
  ShelfDifferentials<Rational> d(s);
  std::size_t good = 0, total = 0;
  for (std::size_t shift = 0; shift < 3; ++shift) {
    MapBuilder<Rational> b(s.space_ptr(), 2, 1);
    for (std::size_t k = 0; k < 9; ++k) b.add(k, (k + shift) % 3, Rational::from_int(1));
    auto out = d.d21(b.build(), d.zero(1, 2));
    for (Index col = 0; col < 27; ++col, ++total) {
      auto x = decode_index(col, 3, 3)[0];
      good += out.column(col) == SparseVector<Rational>{{x, Rational::from_int(-1)}};
    }
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " basis triples give -x"};
}

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {1, "grouplike classification", 1, grouplike_classification},
      {2, "trigonometric table", 1, trig_table},
      {3, "rack shelves in coalgebras", 5, rack_shelves},
      {4, "Lie shelves N(g)", 30, lie_shelves},
      {5, "Hopf adjoint shelf", 10, hopf_adjoint},
      {6, "Yang-Baxter and Lie closed form", 60, ybe_and_closed_form},
      {7, "q_{R_q} = q round trip", 60, induced_q_round_trip},
      {8, "D2 D1 = 0", 30, d2d1},
      {9, "D3' D2' = 0", 60, d3d2},
      {10, "H^{2,1}(N(W'5)) nonzero", 60, witt_central_extension},
      {11, "quandle 2-cocycle lift", 60, quandle_degree2},
      {12, "quandle 3-cocycle lift", 60, quandle_degree3},
      {13, "Lie cocycle lifts", 60, lie_pipeline},
      {14, "Hochschild identities", 60, hochschild},
      {15, "first-order deformations", 60, deformation},
      {16, "trivial quandle sign", 10, trivial_quandle_sign},
  };
  int failed = 0;
  for (const auto& c : cs) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.ok && secs <= c.limit_s;
    failed += !pass;
    std::printf("%s %2d %s [%.2fs / limit %.0fs] %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(cs.size()) - failed, cs.size());
  return failed == 0 ? 0 : 1;
}
