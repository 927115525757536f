#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "shelf/coalgebra.hpp"
#include "shelf/linalg.hpp"
#include "shelf/shelfcohomology.hpp"
#include "shelf/shelfmap.hpp"

using namespace shelf;

namespace {

constexpr long long P = 7;

// Plain dense matrices mod P: the oracle for composition, tensor products and rank.
using Dense = std::vector<std::vector<long long>>;

long long mod(long long x) { return ((x % P) + P) % P; }

Dense dense_of(const LinearMap<ModP>& m) {
  Dense d(m.codomain_dim(), std::vector<long long>(m.domain_dim(), 0));
  for (Index c = 0; c < m.domain_dim(); ++c)
    for (const auto& [r, v] : m.column(c)) d[r][c] = static_cast<long long>(v.residue());
  return d;
}

Dense multiply(const Dense& a, const Dense& b) {
  Dense out(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = mod(out[i][j] + a[i][k] * b[k][j]);
  return out;
}

Dense tensor(const Dense& a, const Dense& b) {
  Dense out(a.size() * b.size(), std::vector<long long>(a[0].size() * b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[0].size(); ++l) out[i * b.size() + k][j * b[0].size() + l] = mod(a[i][j] * b[k][l]);
  return out;
}

long long inverse_mod(long long a) {
  long long r = 1;
  for (long long e = P - 2, b = a; e > 0; e >>= 1, b = mod(b * b))
    if (e & 1) r = mod(r * b);
  return r;
}

std::size_t dense_rank(Dense m) {
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    long long inv = inverse_mod(m[rank][c]);
    for (auto& x : m[rank]) x = mod(x * inv);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c] != 0) {
        long long f = m[r][c];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k]);
      }
    ++rank;
  }
  return rank;
}

struct TensorFixture : ::testing::Test {
  FieldSpec field = FieldSpec::prime(P);
  std::shared_ptr<const BasedSpace> sp2 = std::make_shared<const BasedSpace>(BasedSpace::numbered(2, field));
  std::mt19937_64 rng{3};
};

}  // namespace

TEST_F(TensorFixture, IdentityTensorIdentity) {
  auto I = LinearMap<ModP>::identity(sp2, 1);
  EXPECT_EQ(kron(I, I), (LinearMap<ModP>::identity(sp2, 2)));
}

TEST_F(TensorFixture, KronActsFactorwise) {
  auto A = random_map<ModP>(sp2, 1, 1, rng), B = random_map<ModP>(sp2, 1, 1, rng);
  auto AB = kron(A, B);
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t v = 0; v < 2; ++v)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(AB.entry(i * 2 + j, u * 2 + v), A.entry(i, u) * B.entry(j, v));
}

TEST_F(TensorFixture, MixedProductProperty) {
  for (int t = 0; t < 20; ++t) {
    auto A = random_map<ModP>(sp2, 1, 1, rng), B = random_map<ModP>(sp2, 1, 2, rng);
    auto C = random_map<ModP>(sp2, 2, 1, rng), D = random_map<ModP>(sp2, 1, 1, rng);
    EXPECT_EQ(compose(kron(A, B), kron(C, D)), kron(compose(A, C), compose(B, D)));
  }
}

TEST_F(TensorFixture, ComposeAndKronMatchDenseOracle) {
  for (int t = 0; t < 20; ++t) {
    auto A = random_map<ModP>(sp2, 2, 1, rng), B = random_map<ModP>(sp2, 1, 2, rng);
    EXPECT_EQ(dense_of(compose(A, B)), multiply(dense_of(A), dense_of(B)));
    EXPECT_EQ(dense_of(kron(A, B)), tensor(dense_of(A), dense_of(B)));
  }
}

TEST_F(TensorFixture, ComposeWithIdentity) {
  auto A = random_map<ModP>(sp2, 2, 1, rng);
  EXPECT_EQ(compose(LinearMap<ModP>::identity(sp2, 1), A), A);
  EXPECT_EQ(compose(A, LinearMap<ModP>::identity(sp2, 2)), A);
}

TEST_F(TensorFixture, TranspositionDefinitionAndInvolution) {
  auto T = LinearMap<ModP>::transposition(sp2, 2, 1);
  EXPECT_EQ(T.entry(encode_index({1, 0}, 2), encode_index({0, 1}, 2)), ModP::from_int(1, field));
  EXPECT_EQ(compose(T, T), (LinearMap<ModP>::identity(sp2, 2)));
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned i = 1; i < n; ++i) {
      auto Ti = LinearMap<ModP>::transposition(sp2, n, i);
      EXPECT_EQ(compose(Ti, Ti), (LinearMap<ModP>::identity(sp2, n))) << n << ' ' << i;
    }
}

TEST_F(TensorFixture, PermutationMovesFactors) {
  auto sp3 = std::make_shared<const BasedSpace>(BasedSpace::numbered(3, field));
  auto P3 = LinearMap<ModP>::permutation(sp3, {2, 0, 1});
  // output factor k is input factor source[k]
  auto col = encode_index({0, 1, 2}, 3);
  EXPECT_EQ(P3.entry(encode_index({2, 0, 1}, 3), col), ModP::from_int(1, field));
}

TEST_F(TensorFixture, CounitAxiomAndCocommutativity) {
  auto c = build_setlike<ModP>({"x", "y"}, field);
  auto I = id_map<ModP>(c.space_ptr());
  EXPECT_EQ(compose(kron(c.epsilon(), I), c.delta()), I);
  EXPECT_EQ(compose(kron(I, c.epsilon()), c.delta()), I);
  EXPECT_EQ(compose(swap_map<ModP>(c.space_ptr()), c.delta()), c.delta());
}

TEST_F(TensorFixture, CompositeMatchesStepwiseComposition) {
  auto sp = sp2;
  auto q = random_map<ModP>(sp, 2, 1, rng), D = random_map<ModP>(sp, 1, 2, rng);
  auto I = LinearMap<ModP>::identity(sp, 1);
  auto T = LinearMap<ModP>::transposition(sp, 2, 1);
  auto lazy = Composite<ModP>{{q, q}, {I, T, I}, {D, D}}.materialize();
  auto eager = compose(kron(q, q), compose(kron({I, T, I}), kron(D, D)));
  EXPECT_EQ(lazy, eager);
}

TEST_F(TensorFixture, ShapeMismatchThrows) {
  auto A = random_map<ModP>(sp2, 2, 1, rng);
  EXPECT_THROW(compose(A, A), std::invalid_argument);
  auto other = std::make_shared<const BasedSpace>(BasedSpace::numbered(3, field));
  EXPECT_THROW(kron(A, LinearMap<ModP>::identity(other, 1)), std::invalid_argument);
}

TEST_F(TensorFixture, MapTextRoundTrip) {
  auto A = random_map<ModP>(sp2, 2, 1, rng);
  std::stringstream ss;
  write_map(ss, A, "a");
  std::string name;
  auto B = read_map<ModP>(ss, sp2, &name);
  EXPECT_EQ(name, "a");
  EXPECT_EQ(A, B);
}

TEST(RankKernel, TrivialCases) {
  auto field = FieldSpec::rationals();
  auto sp = std::make_shared<const BasedSpace>(BasedSpace::numbered(3, field));
  auto id = rank_kernel(LinearMap<Rational>::identity(sp, 1));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_TRUE(id.kernel_basis.empty());
  auto zero = rank_kernel(LinearMap<Rational>::zero(sp, 1, 1));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.kernel_basis.size(), 3u);
}

TEST(RankKernel, RankNullityOnRandomMatrices) {
  auto field = FieldSpec::prime(P);
  auto sp = std::make_shared<const BasedSpace>(BasedSpace::numbered(2, field));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    // rank-deficient maps: a product through a smaller power
    auto A = compose(random_map<ModP>(sp, 1, 2, rng), random_map<ModP>(sp, 2, 1, rng));
    auto rk = rank_kernel(A);
    EXPECT_EQ(rk.rank + rk.kernel_basis.size(), A.domain_dim());
    EXPECT_EQ(rk.rank, dense_rank(dense_of(A)));
    for (const auto& v : rk.kernel_basis) EXPECT_TRUE(A.apply(to_sparse(v)).empty());
  }
}

TEST(RankKernel, AssembledDifferentialMatchesDenseOracle) {
  auto s = q_from_rack<ModP>(dihedral_quandle(3), FieldSpec::prime(P));
  RestrictedComplex<ModP> cx(s, D2Target::Column);
  auto m = cx.D2_matrix();
  Dense d(m.target_dim, std::vector<long long>(m.source_dim, 0));
  for (std::size_t c = 0; c < m.columns.size(); ++c)
    for (const auto& [r, v] : m.columns[c]) d[r][c] = static_cast<long long>(v.residue());
  EXPECT_EQ(rank_of_columns(m.columns, m.target_dim), dense_rank(d));
}

TEST(Subspace, Membership) {
  auto field = FieldSpec::rationals();
  Subspace<Rational> s(3);
  DenseVector<Rational> v{Rational::from_int(1), Rational::from_int(2), Rational::from_int(3)};
  DenseVector<Rational> w{Rational::from_int(0), Rational::from_int(1), Rational::from_int(0)};
  DenseVector<Rational> zero(3, Rational::from_int(0));
  EXPECT_TRUE(s.contains(zero));
  s.insert(v);
  EXPECT_TRUE(s.contains(v));
  EXPECT_FALSE(s.contains(w));
  EXPECT_TRUE(subspace_membership(zero, {v}));
  EXPECT_TRUE(subspace_membership(DenseVector<Rational>{Rational::from_int(2), Rational::from_int(4), Rational::from_int(6)}, {v}));
  EXPECT_FALSE(subspace_membership(w, {v}));
  (void)field;
}
