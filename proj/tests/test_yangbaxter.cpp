#include <random>

#include <gtest/gtest.h>

#include "shelf/lie.hpp"
#include "shelf/shelfcohomology.hpp"
#include "shelf/yangbaxter.hpp"

using namespace shelf;

namespace {

using detail::tensor_vectors;

template <FieldScalar F>
SparseVector<F> e(std::size_t i, const FieldSpec& f) {
  return {{i, F::from_int(1, f)}};
}

}  // namespace

TEST(InducedR, GrouplikeSwapsAndActs) {
  auto f = FieldSpec::prime(5);
  auto r = dihedral_quandle(4);
  auto c = build_setlike<ModP>(BasedSpace::numbered(4, f).labels, f);
  auto q = setlike_rack_q<ModP>(r, c.space_ptr());
  auto R = induced_r(q, c.delta());
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      EXPECT_EQ(R.apply(tensor_vectors(e<ModP>(x, f), e<ModP>(y, f), 4)),
                tensor_vectors(e<ModP>(y, f), e<ModP>(r.op(x, y), f), 4));
  EXPECT_TRUE(check_ybe(R));
  EXPECT_TRUE(make_yb_operator(R).invertible);
}

TEST(InducedR, ZeroShelfGivesZero) {
  auto c = build_augmented<Rational>(3, FieldSpec::rationals());
  auto z = LinearMap<Rational>::zero(c.space_ptr(), 2, 1);
  EXPECT_TRUE(induced_r(z, c.delta()).is_zero());
  EXPECT_TRUE(q_from_r(LinearMap<Rational>::zero(c.space_ptr(), 2, 2), c).is_zero());
}

TEST(InducedQ, SwapGivesCounitTimesFirst) {
  auto c = build_augmented<Rational>(2, FieldSpec::rationals());
  auto T = swap_map<Rational>(c.space_ptr());
  auto qT = q_from_r(T, c);
  // q_τ(u⊗v) = ε(v)u; every basis vector of W has ε = 1
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v)
      EXPECT_EQ(qT.apply(e<Rational>(u * 3 + v, FieldSpec::rationals())), e<Rational>(u, FieldSpec::rationals()));
  auto lie = build_lie_N(sl2_type<Rational>(FieldSpec::rationals()));
  auto qL = q_from_r(swap_map<Rational>(lie.space_ptr()), lie);
  EXPECT_TRUE(qL.apply(e<Rational>(1 * 4 + 2, FieldSpec::rationals())).empty());
  EXPECT_EQ(qL.apply(e<Rational>(2 * 4 + 0, FieldSpec::rationals())), e<Rational>(2, FieldSpec::rationals()));
}

TEST(InducedQ, RoundTripOnRandomMaps) {
  std::mt19937_64 rng(20240917);
  auto f7 = FieldSpec::prime(7);
  std::vector<Coalgebra<ModP>> cs = {build_augmented<ModP>(3, f7), build_lie_N(witt<ModP>(7)),
                                     build_setlike<ModP>({"x", "y"}, f7)};
  for (const auto& c : cs)
    for (int t = 0; t < 100; ++t) {
      auto q = random_map<ModP>(c.space_ptr(), 2, 1, rng);
      ASSERT_EQ(q_from_r(induced_r(q, c.delta()), c), q);
    }
  auto trig = build_trig<GaussianRational>(FieldSpec::gaussian());
  for (int t = 0; t < 100; ++t) {
    auto q = random_map<GaussianRational>(trig.space_ptr(), 2, 1, rng);
    ASSERT_EQ(q_from_r(induced_r(q, trig.delta()), trig), q);
  }
}

TEST(YBE, IdentityAndSwap) {
  auto sp = std::make_shared<const BasedSpace>(BasedSpace::numbered(3, FieldSpec::rationals()));
  EXPECT_TRUE(check_ybe(LinearMap<Rational>::identity(sp, 2)));
  EXPECT_TRUE(check_ybe(swap_map<Rational>(sp)));
}

TEST(YBE, RandomMapFails) {
  auto sp = std::make_shared<const BasedSpace>(BasedSpace::numbered(2, FieldSpec::prime(5)));
  std::mt19937_64 rng(77);
  auto R = random_map<ModP>(sp, 2, 2, rng);
  EXPECT_FALSE(check_ybe(R));
}

TEST(YBE, RackShelves) {
  auto s3 = q_from_rack<ModP>(dihedral_quandle(3), FieldSpec::prime(3));
  EXPECT_TRUE(check_ybe(r_from_q(s3)));
  auto s4 = q_from_rack<ModP>(dihedral_quandle(4), FieldSpec::prime(3));
  EXPECT_TRUE(check_ybe(r_from_q(s4)));
  auto sq = q_from_rack<Rational>(dihedral_quandle(3), FieldSpec::rationals());
  EXPECT_TRUE(check_ybe(r_from_q(sq)));
}

TEST(YBE, LieShelfMatchesClosedForm) {
  auto g = witt<ModP>(5);
  auto s = q_from_lie(g);
  auto R = r_from_q(s);
  EXPECT_EQ(R.R, lie_r_closed_form(g, s.space_ptr()));
  EXPECT_TRUE(check_ybe(R));
  auto gq = sl2_type<Rational>(FieldSpec::rationals());
  auto sq = q_from_lie(gq);
  EXPECT_EQ(r_from_q(sq).R, lie_r_closed_form(gq, sq.space_ptr()));
}

TEST(YBE, LieClosedFormEntries) {
  // (0,h)⊗(0,e) ↦ (0,e)⊗(0,h) + (1,0)⊗(0,2e)
  auto f = FieldSpec::rationals();
  auto g = sl2_type<Rational>(f);
  auto s = q_from_lie(g);
  auto out = r_from_q(s).R.apply(tensor_vectors(e<Rational>(1, f), e<Rational>(2, f), 4));
  auto expect = tensor_vectors(e<Rational>(2, f), e<Rational>(1, f), 4);
  expect.push_back({encode_index({0, 2}, 4), Rational::from_int(2)});
  std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  EXPECT_EQ(out, expect);
}

TEST(InducedShelfCriterion, SetlikeRackOperator) {
  auto f = FieldSpec::rationals();
  auto c = build_setlike<Rational>(BasedSpace::numbered(3, f).labels, f);
  auto R = induced_r(setlike_rack_q<Rational>(dihedral_quandle(3), c.space_ptr()), c.delta());
  auto rep = check_induced_shelf(R, c);
  EXPECT_TRUE(rep.counit_condition);
  EXPECT_TRUE(rep.fixed_point);
  ASSERT_TRUE(rep.conclusion_shelf_in_coalg.has_value());
  EXPECT_TRUE(*rep.conclusion_shelf_in_coalg);
}

TEST(InducedShelfCriterion, SwapOperator) {
  auto f = FieldSpec::rationals();
  auto c = build_setlike<Rational>({"x", "y", "z"}, f);
  auto rep = check_induced_shelf(swap_map<Rational>(c.space_ptr()), c);
  EXPECT_TRUE(rep.hypotheses());
  ASSERT_TRUE(rep.conclusion_shelf_in_coalg.has_value());
  EXPECT_TRUE(*rep.conclusion_shelf_in_coalg);
}

TEST(InducedShelfCriterion, CounitViolationReported) {
  auto f = FieldSpec::rationals();
  auto c = build_setlike<Rational>({"x", "y"}, f);
  auto R = swap_map<Rational>(c.space_ptr()) + swap_map<Rational>(c.space_ptr());
  EXPECT_TRUE(check_ybe(R));
  auto rep = check_induced_shelf(R, c);
  EXPECT_FALSE(rep.counit_condition);
  EXPECT_FALSE(rep.conclusion_shelf_in_coalg.has_value());
}

TEST(AdjointIdentities, GroupAlgebras) {
  auto f = FieldSpec::rationals();
  for (const auto& grp : {symmetric_group_s3(), cyclic_group(3)}) {
    auto h = build_group_hopf<Rational>(grp, f);
    auto s = q_adjoint(h);
    auto rep = check_adjoint_identities(s.q, h);
    EXPECT_TRUE(rep.eq1);
    EXPECT_TRUE(rep.eq2);
    EXPECT_TRUE(check_ybe(r_from_q(s)));
  }
}

TEST(AdjointIdentities, WrongMapFailsFirstIdentity) {
  auto f = FieldSpec::rationals();
  auto h = build_group_hopf<Rational>(symmetric_group_s3(), f);
  // q(g⊗h) = g⁻¹hg
  auto conj = conjugation_quandle(symmetric_group_s3());
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) t[a][b] = conj.op(b, a);
  FiniteRack flipped{6, t, false, "flipped"};
  auto q = setlike_rack_q<Rational>(flipped, h.space_ptr());
  EXPECT_FALSE(check_adjoint_identities(q, h).eq1);
}

TEST(CompatibleShelfYBE, PropertyOverCocommutativeShelves) {
  // cocommutative + SD + compatible implies YBE
  auto f = FieldSpec::prime(5);
  std::vector<ShelfStructure<ModP>> shelves = {q_from_rack<ModP>(dihedral_quandle(5), f),
                                               q_from_rack<ModP>(conjugation_quandle(symmetric_group_s3()), f),
                                               q_from_rack<ModP>(alexander_quandle(5, 2), f)};
  for (const auto& s : shelves) {
    ASSERT_TRUE(s.coalgebra.cocommutative() && s.comult_compatible);
    EXPECT_TRUE(check_ybe(r_from_q(s)));
  }
}
