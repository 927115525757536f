#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "shelf/coalgebra.hpp"
#include "shelf/fixtures.hpp"
#include "shelf/shelfcohomology.hpp"

using namespace shelf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Rational r(long long n) { return Rational::from_int(n); }

}  // namespace

TEST(Coalgebra, SetlikeAxioms) {
  auto c = build_setlike<Rational>({"x", "y"}, Q);
  auto rep = verify_coalgebra(c);
  EXPECT_TRUE(rep.coassociative && rep.counital && rep.cocommutative);
  EXPECT_EQ(c.delta().entry(encode_index({1, 1}, 2), 1), r(1));
  EXPECT_EQ(c.delta().entry(encode_index({0, 1}, 2), 1), r(0));
  EXPECT_EQ(c.epsilon().entry(0, 0), r(1));
  EXPECT_EQ(c.epsilon().entry(0, 1), r(1));
}

TEST(Coalgebra, AugmentedCounitAndUnit) {
  auto c = build_augmented<Rational>(3, Q);
  EXPECT_EQ(c.dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(c.epsilon().entry(0, i), r(1));
  EXPECT_EQ(c.delta().entry(0, 0), r(1));
  EXPECT_EQ(c.delta().column(0).size(), 1u);
}

TEST(Coalgebra, LieNComultiplication) {
  auto g = sl2_type<Rational>(Q);
  auto c = build_lie_N(g);
  EXPECT_TRUE(c.cocommutative());
  // Δ(0, x) = x⊗1 + 1⊗x and ε(x) = 0 for x in g
  for (std::size_t x = 1; x < 4; ++x) {
    EXPECT_EQ(c.epsilon().entry(0, x), r(0));
    EXPECT_EQ(c.delta().entry(encode_index({x, 0}, 4), x), r(1));
    EXPECT_EQ(c.delta().entry(encode_index({0, x}, 4), x), r(1));
    EXPECT_EQ(c.delta().column(x).size(), 2u);
  }
  EXPECT_EQ(c.epsilon().entry(0, 0), r(1));
}

TEST(Coalgebra, Trigonometric) {
  auto c = build_trig<GaussianRational>(FieldSpec::gaussian());
  auto rep = verify_coalgebra(c);
  EXPECT_TRUE(rep.coassociative && rep.counital && rep.cocommutative);
  auto one = GaussianRational::from_int(1);
  EXPECT_EQ(c.delta().entry(encode_index({0, 1}, 2), 1), one);
  EXPECT_EQ(c.delta().entry(encode_index({1, 0}, 2), 1), one);
  EXPECT_EQ(c.delta().entry(encode_index({1, 1}, 2), 0), -one);
  EXPECT_EQ(c.epsilon().entry(0, 0), one);
  EXPECT_TRUE(c.epsilon().entry(0, 1).is_zero());
}

TEST(Coalgebra, PerturbedComultiplicationRejected) {
  auto c = build_setlike<Rational>({"x", "y"}, Q);
  MapBuilder<Rational> d(c.space_ptr(), 1, 2);
  d.add({0}, {0, 0}, r(1));
  d.add({1}, {1, 1}, r(1));
  d.add({1}, {0, 1}, r(1));
  auto bad = d.build();
  auto rep = check_coalgebra_maps(bad, c.epsilon());
  EXPECT_FALSE(rep.coassociative);
  EXPECT_THROW(Coalgebra<Rational>(c.space_ptr(), bad, c.epsilon()), std::invalid_argument);
}

TEST(Hopf, GroupAlgebras) {
  auto z2 = build_group_hopf<Rational>(cyclic_group(2), Q);
  EXPECT_TRUE(verify_hopf(z2).all());
  EXPECT_EQ(z2.antipode(), (LinearMap<Rational>::identity(z2.space_ptr(), 1)));
  EXPECT_EQ(compose(z2.epsilon(), z2.unit()).entry(0, 0), r(1));
  EXPECT_TRUE(verify_hopf(build_group_hopf<Rational>(cyclic_group(3), Q)).all());
  auto s3 = build_group_hopf<Rational>(symmetric_group_s3(), Q);
  EXPECT_TRUE(verify_hopf(s3).all());
}

TEST(Hopf, CorruptAntipodeFailsAntipodeRow) {
  auto h = build_group_hopf<Rational>(cyclic_group(3), Q);
  auto bad = h.antipode() + elementary_map<Rational>(h.space_ptr(), 1, 1, 1);
  auto rep = check_hopf_maps(h.mu(), h.unit(), h.delta(), h.epsilon(), bad);
  EXPECT_FALSE(rep.antipode);
  EXPECT_TRUE(rep.associativity && rep.coassociativity);
}

TEST(Hopf, StructureFileRoundTrip) {
  auto h = build_group_hopf<Rational>(symmetric_group_s3(), Q);
  std::stringstream ss;
  write_structure<Rational>(ss, "kS3", *h.space_ptr(),
                            {{"mu", h.mu()}, {"unit", h.unit()}, {"delta", h.delta()}, {"epsilon", h.epsilon()},
                             {"antipode", h.antipode()}});
  EXPECT_EQ(structure_field(ss.str()), Q);
  auto s = read_structure<Rational>(ss);
  auto h2 = hopf_from_structure(s);
  EXPECT_EQ(h2.mu(), h.mu());
  EXPECT_EQ(h2.antipode(), h.antipode());
  EXPECT_TRUE(verify_hopf(h2).all());
}

TEST(Rack, Constructions) {
  auto r3 = dihedral_quandle(3);
  EXPECT_EQ(r3.op(1, 2), 0u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(r3.op(i, j), (2 * j + 3 - i) % 3);
  auto t = trivial_quandle(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(t.op(i, j), i);
  auto conj = conjugation_quandle(symmetric_group_s3());
  EXPECT_EQ(conj.n, 6u);
  auto ax = check_rack_axioms(conj.table);
  EXPECT_TRUE(ax.right_invertible && ax.self_distributive);
  EXPECT_TRUE(conj.quandle);
}

TEST(Rack, RejectsNonSelfDistributiveTable) {
  // columns are the permutations id, (01), (12): invertible but not self-distributive
  EXPECT_THROW(make_rack({{0, 1, 0}, {1, 0, 2}, {2, 2, 1}}, false), std::invalid_argument);
  EXPECT_TRUE(make_rack({{1, 1}, {0, 0}}, false).n == 2);
}

TEST(Fixtures, Registry) {
  EXPECT_EQ(rack_fixture("dihedral:5").n, 5u);
  EXPECT_EQ(rack_fixture("trivial:2").op(0, 1), 0u);
  EXPECT_EQ(rack_fixture("conj:S3").n, 6u);
  EXPECT_EQ(rack_fixture("alexander:5:2").n, 5u);
  EXPECT_THROW(rack_fixture("nonsense:3"), std::invalid_argument);
  EXPECT_EQ(lie_fixture_field("witt:7"), FieldSpec::prime(7));
  EXPECT_FALSE(lie_fixture_field("sl2-type"));
  EXPECT_EQ(lie_fixture<ModP>("witt:5", FieldSpec::prime(5)).dim(), 5u);
  EXPECT_THROW(lie_fixture<ModP>("witt:5", FieldSpec::prime(7)), std::invalid_argument);
  EXPECT_EQ(lie_fixture<Rational>("abelian:4", Q).dim(), 4u);
  EXPECT_EQ(hopf_fixture<Rational>("group:S3", Q).dim(), 6u);
  EXPECT_EQ(hopf_fixture<Rational>("group:Z4", Q).dim(), 4u);
  EXPECT_THROW(hopf_fixture<Rational>("group:Q8", Q), std::invalid_argument);
}

TEST(Fixtures, RackFile) {
  std::string path = ::testing::TempDir() + "r3.rack";
  {
    std::ofstream os(path);
    write_rack(os, dihedral_quandle(3));
  }
  auto r = rack_fixture(path);
  EXPECT_EQ(r.table, dihedral_quandle(3).table);
  EXPECT_TRUE(r.quandle);
  std::remove(path.c_str());
}
