#include <random>

#include <gtest/gtest.h>

#include "shelf/liecoh.hpp"

using namespace shelf;

namespace {

long long modp(long long x, long long p) { return ((x % p) + p) % p; }

// Virasoro values and the Witt bracket written out with plain integers.
long long virasoro_value(long long a, long long b, long long p) {
  return modp(a + b, p) == 0 ? modp(a * (a * a - 1), p) : 0;
}

template <FieldScalar F>
LieCochain<F> random_cochain(std::size_t n, int degree, Coefficients coeff, const FieldSpec& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  LieCochain<F> c(n, degree, coeff, f);
  DenseVector<F> v(c.free_dim());
  for (auto& x : v) x = F::from_int(d(rng), f);
  return LieCochain<F>::from_flat(n, degree, coeff, f, v);
}

// The six-term adjoint display for a 2-cochain, summed over basis triples.
template <FieldScalar F>
bool adjoint_display_holds(const LieCochain<F>& psi, const LieAlgebra<F>& g) {
  std::size_t n = g.dim();
  auto apply = [&](const DenseVector<F>& u, std::size_t z) {
    DenseVector<F> out(n, F::from_int(0, g.field()));
    for (std::size_t k = 0; k < n; ++k)
      if (!u[k].is_zero()) {
        auto v = psi.at({k, z});
        for (std::size_t r = 0; r < n; ++r) out[r] = out[r] + u[k] * v[r];
      }
    return out;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto t1 = g.bracket(psi.at({x, y}), g.basis(z));
        auto t2 = g.bracket(psi.at({y, z}), g.basis(x));
        auto t3 = g.bracket(psi.at({z, x}), g.basis(y));
        auto t4 = apply(g.bracket(x, y), z);
        auto t5 = apply(g.bracket(y, z), x);
        auto t6 = apply(g.bracket(z, x), y);
        for (std::size_t r = 0; r < n; ++r)
          if (!(t1[r] + t2[r] + t3[r] + t4[r] + t5[r] + t6[r]).is_zero()) return false;
      }
  return true;
}

}  // namespace

TEST(LieAlgebra, Constructors) {
  auto w = witt<ModP>(5);
  EXPECT_EQ(w.dim(), 5u);
  auto f = FieldSpec::prime(5);
  for (long long a = 0; a < 5; ++a)
    for (long long b = 0; b < 5; ++b)
      for (long long k = 0; k < 5; ++k) {
        long long expect = k == (a + b) % 5 ? modp(b - a, 5) : 0;
        EXPECT_EQ(w.constant(a, b, k), ModP::from_int(expect, f));
      }
  EXPECT_EQ(w.bracket(1, 2), w.basis(3));
  EXPECT_THROW(witt<ModP>(3), std::invalid_argument);
  EXPECT_EQ(abelian_lie<Rational>(FieldSpec::rationals(), 3).dim(), 3u);
  // [x,y] = x, [y,z] = y, [x,z] = 0 breaks Jacobi
  EXPECT_THROW(make_lie<Rational>(FieldSpec::rationals(), {"x", "y", "z"}, {{0, 1, 0, "1"}, {1, 2, 1, "1"}}),
               std::invalid_argument);
}

TEST(Virasoro, ValuesOnW5) {
  auto c = virasoro_cocycle<ModP>(5);
  auto f = FieldSpec::prime(5);
  EXPECT_EQ(c.at({2, 3})[0], ModP::from_int(1, f));
  EXPECT_TRUE(c.at({1, 4})[0].is_zero());
  for (long long a = 0; a < 5; ++a)
    for (long long b = 0; b < 5; ++b) EXPECT_EQ(c.at({std::size_t(a), std::size_t(b)})[0], ModP::from_int(virasoro_value(a, b, 5), f));
}

TEST(Virasoro, TrivialCocycleByDirectSum) {
  for (long long p : {5, 7, 11}) {
    // c([x,y],z) + c([y,z],x) + c([z,x],y) with [e_a,e_b] = (b−a)e_{a+b}
    for (long long a = 0; a < p; ++a)
      for (long long b = 0; b < p; ++b)
        for (long long z = 0; z < p; ++z) {
          long long s = (b - a) * virasoro_value((a + b) % p, z, p) + (z - b) * virasoro_value((b + z) % p, a, p) +
                        (a - z) * virasoro_value((z + a) % p, b, p);
          ASSERT_EQ(modp(s, p), 0) << a << ' ' << b << ' ' << z;
        }
    auto c = virasoro_cocycle<ModP>(p);
    EXPECT_TRUE(lie_cocycle_check(c, witt<ModP>(p)));
  }
}

TEST(Virasoro, NotACoboundaryAndDimensionOne) {
  auto g = witt<ModP>(5);
  EXPECT_FALSE(is_lie_coboundary(virasoro_cocycle<ModP>(5), g));
  auto d = lie_cohomology_dim(g, 2, Coefficients::Trivial);
  EXPECT_EQ(d.h, 1u);
}

TEST(Coboundary, SquaresToZero) {
  std::mt19937_64 rng(17);
  auto sl2 = sl2_type<Rational>(FieldSpec::rationals());
  auto w5 = witt<ModP>(5);
  for (auto coeff : {Coefficients::Adjoint, Coefficients::Trivial})
    for (int m : {1, 2}) {
      for (int t = 0; t < 5; ++t) {
        auto c = random_cochain<Rational>(3, m, coeff, FieldSpec::rationals(), rng);
        EXPECT_TRUE(lie_coboundary(sl2, lie_coboundary(sl2, c)).is_zero());
        auto cw = random_cochain<ModP>(5, m, coeff, FieldSpec::prime(5), rng);
        EXPECT_TRUE(lie_coboundary(w5, lie_coboundary(w5, cw)).is_zero());
      }
    }
}

TEST(Coboundary, DegreeOneFormula) {
  auto g = sl2_type<Rational>(FieldSpec::rationals());
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<DenseVector<Rational>> cols(3, DenseVector<Rational>(3));
  for (auto& c : cols)
    for (auto& x : c) x = Rational::from_int(d(rng));
  auto apply = [&](const DenseVector<Rational>& v) {
    DenseVector<Rational> out(3, Rational::from_int(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t r = 0; r < 3; ++r) out[r] = out[r] + v[i] * cols[i][r];
    return out;
  };
  auto psi = lie_coboundary_of_map(g, cols);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      auto a = g.bracket(g.basis(x), cols[y]), b = g.bracket(cols[x], g.basis(y)), c = apply(g.bracket(x, y));
      DenseVector<Rational> expect(3);
      for (std::size_t r = 0; r < 3; ++r) expect[r] = a[r] + b[r] - c[r];
      EXPECT_EQ(psi.at({x, y}), expect);
    }
  EXPECT_TRUE(lie_cocycle_check(psi, g));
  EXPECT_TRUE(adjoint_display_holds(psi, g));
}

TEST(CocycleCheck, AgreesWithAdjointDisplay) {
  std::mt19937_64 rng(23);
  auto g = witt<ModP>(5);
  auto cs = lie_cocycles(g, 2, Coefficients::Adjoint);
  for (const auto& c : cs.cocycles) EXPECT_TRUE(adjoint_display_holds(c, g));
  for (int t = 0; t < 10; ++t) {
    auto c = random_cochain<ModP>(5, 2, Coefficients::Adjoint, FieldSpec::prime(5), rng);
    EXPECT_EQ(lie_cocycle_check(c, g), adjoint_display_holds(c, g));
  }
  EXPECT_TRUE(lie_cocycle_check(LieCochain<ModP>(5, 2, Coefficients::Adjoint, FieldSpec::prime(5)), g));
}

TEST(CocycleCheck, DegreeThreeDisplay) {
  auto g = sl2_type<Rational>(FieldSpec::rationals());
  auto cs = lie_cocycles(g, 3, Coefficients::Adjoint);
  ASSERT_FALSE(cs.cocycles.empty());
  for (const auto& z : cs.cocycles) EXPECT_TRUE(degree3_display_holds(z, g, -1));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    auto z = random_cochain<Rational>(3, 3, Coefficients::Adjoint, FieldSpec::rationals(), rng);
    EXPECT_EQ(lie_cocycle_check(z, g), degree3_display_holds(z, g, -1));
  }
}

TEST(CentralExtension, StructureAndCocycle) {
  auto g = witt<ModP>(5);
  auto ext = central_extend(g, virasoro_cocycle<ModP>(5));
  const auto& h = ext.algebra;
  ASSERT_EQ(h.dim(), 6u);
  for (std::size_t z = 0; z < 6; ++z) {
    for (auto x : h.bracket(0, z)) EXPECT_TRUE(x.is_zero());
  }
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(h.constant(i + 1, j + 1, k + 1), g.constant(i, j, k));
  EXPECT_TRUE(lie_cocycle_check(ext.psi, h));
  EXPECT_TRUE(adjoint_display_holds(ext.psi, h));
  EXPECT_EQ(ext.psi.at({3, 4})[0], ModP::from_int(1, FieldSpec::prime(5)));  // c(e2,e3) γ
  EXPECT_FALSE(is_lie_coboundary(ext.psi, h));

  auto zero = central_extend(g, LieCochain<ModP>(5, 2, Coefficients::Trivial, FieldSpec::prime(5)));
  EXPECT_TRUE(zero.psi.is_zero());
  LieCochain<ModP> bad(5, 2, Coefficients::Trivial, FieldSpec::prime(5));
  bad.set({0, 1}, {ModP::from_int(1, FieldSpec::prime(5))});
  EXPECT_THROW(central_extend(g, bad), std::invalid_argument);
}

TEST(LiftPsi, CentralExtensionOfWitt) {
  auto ext = central_extend(witt<ModP>(5), virasoro_cocycle<ModP>(5));
  auto s = q_from_lie(ext.algebra);
  auto hat = lift_psi_hat(ext.psi, ext.algebra, s.space_ptr());
  for (std::size_t u = 0; u < 7; ++u) {
    EXPECT_TRUE(hat.column(u * 7).empty());
    EXPECT_TRUE(hat.column(u).empty());
  }
  RestrictedComplex<ModP> cx(s, D2Target::Column);
  const auto& d = cx.differentials();
  EXPECT_TRUE(d.d21(hat, d.zero(1, 2)).is_zero());
  EXPECT_TRUE(d.d22(hat, d.zero(1, 2)).is_zero());
  EXPECT_FALSE(is_coboundary(make_cochain(2, 1, hat), cx));
}

TEST(LiftPsi, CoboundariesLiftToCoboundaries) {
  auto g = sl2_type<Rational>(FieldSpec::rationals());
  auto s = q_from_lie(g);
  RestrictedComplex<Rational> cx(s, D2Target::Column);
  const auto& d = cx.differentials();
  auto cs = lie_cocycles(g, 2, Coefficients::Adjoint);
  ASSERT_FALSE(cs.cocycles.empty());
  for (const auto& psi : cs.cocycles) {
    ASSERT_TRUE(is_lie_coboundary(psi, g));
    auto hat = lift_psi_hat(psi, g, s.space_ptr());
    EXPECT_TRUE(d.d21(hat, d.zero(1, 2)).is_zero());
    EXPECT_TRUE(d.d22(hat, d.zero(1, 2)).is_zero());
    EXPECT_TRUE(is_coboundary(make_cochain(2, 1, hat), cx));
  }
}

TEST(LiftPsi, EveryAdjointCocycleOfWittLifts) {
  auto g = witt<ModP>(5);
  auto s = q_from_lie(g);
  ShelfDifferentials<ModP> d(s);
  auto cs = lie_cocycles(g, 2, Coefficients::Adjoint);
  for (const auto& psi : cs.cocycles) {
    auto hat = lift_psi_hat(psi, g, s.space_ptr());
    EXPECT_TRUE(d.d21(hat, d.zero(1, 2)).is_zero());
    EXPECT_TRUE(d.d22(hat, d.zero(1, 2)).is_zero());
  }
  std::mt19937_64 rng(1);
  LieCochain<ModP> junk = random_cochain<ModP>(5, 2, Coefficients::Adjoint, FieldSpec::prime(5), rng);
  ASSERT_FALSE(lie_cocycle_check(junk, g));
  EXPECT_THROW(lift_psi_hat(junk, g, s.space_ptr()), std::invalid_argument);
}

TEST(LiftZeta, KernelCocyclesLift) {
  auto run = []<class F>(const LieAlgebra<F>& g) {
    auto s = q_from_lie(g);
    ShelfDifferentials<F> d(s);
    auto cs = lie_cocycles(g, 3, Coefficients::Adjoint);
    ASSERT_FALSE(cs.cocycles.empty());
    for (const auto& z : cs.cocycles) {
      auto hat = lift_zeta_hat(z, g, s.space_ptr());
      EXPECT_TRUE(d.d31({hat, d.zero(2, 2), d.zero(1, 3)}).is_zero());
    }
  };
  run(sl2_type<Rational>(FieldSpec::rationals()));
  run(witt<ModP>(5));
  auto g = sl2_type<Rational>(FieldSpec::rationals());
  auto s = q_from_lie(g);
  auto zero = lift_zeta_hat(LieCochain<Rational>(3, 3, Coefficients::Adjoint, FieldSpec::rationals()), g, s.space_ptr());
  EXPECT_TRUE(zero.is_zero());
}
