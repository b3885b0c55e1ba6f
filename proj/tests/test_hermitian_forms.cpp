#include <gtest/gtest.h>

#include <random>

#include <siegel/cone.hpp>
#include <siegel/hermitian.hpp>

using namespace siegel;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }
const GaussianRational I = GaussianRational::i();

ExactMatrix diag(std::initializer_list<long> d) {
  std::vector<GaussianRational> v;
  for (long x : d) v.emplace_back(x);
  return ExactMatrix::diagonal(v);
}

ExactMatrix mat2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d) {
  ExactMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

ExactMatrix id(std::size_t m) { return ExactMatrix::identity(m); }

void expect_skew_exact(const HermitianTuple& h, const SkewSpaceBasis& l) {
  for (const auto& b : l.basis)
    for (const auto& hj : h.components()) EXPECT_TRUE((hj * b + adjoint(b) * hj).is_zero());
}

}  // namespace

TEST(HermitianTuple, ConventionAndErrors) {
  const HermitianTuple h(2, {mat2(1, I, -I, 2)});
  const ComplexVector w{GaussianRational(1), GaussianRational(0)}, wp{GaussianRational(0), GaussianRational(1)};
  EXPECT_EQ(h(w, wp)[0], I);
  // Anti-linear in the first slot, linear in the second.
  const ComplexVector iw{I, GaussianRational(0)}, iwp{GaussianRational(0), I};
  EXPECT_EQ(h(iw, wp)[0], I * (-I));
  EXPECT_EQ(h(w, iwp)[0], I * I);
  EXPECT_EQ(h.quadratic(ComplexVector{GaussianRational(1), GaussianRational(1)})[0], q(3));
  EXPECT_THROW(HermitianTuple(2, {mat2(1, I, I, 2)}), validation_error);
  EXPECT_THROW(HermitianTuple(2, {id(3)}), dimension_error);
  EXPECT_EQ(HermitianTuple::zero(3, 0).k(), 3u);
}

TEST(Definiteness, ExactTests) {
  EXPECT_TRUE(is_positive_definite(mat2(2, I, -I, 1)));
  EXPECT_FALSE(is_positive_definite(mat2(1, I, -I, 1)));
  EXPECT_TRUE(is_positive_semidefinite(mat2(1, I, -I, 1)));
  EXPECT_FALSE(is_positive_semidefinite(diag({1, -1})));
  EXPECT_TRUE(is_positive_semidefinite(diag({0, 3})));
  EXPECT_FALSE(is_positive_definite(diag({0, 3})));
  EXPECT_TRUE(is_positive_semidefinite(ExactMatrix(2, 2)));
  // Zero leading entry with nonzero off-diagonal: indefinite.
  EXPECT_FALSE(is_positive_semidefinite(mat2(0, 1, 1, 1)));
}

TEST(OmegaHermitian, CatalogAndTrivialExamples) {
  const auto l3 = ConeSpec::lorentz(3);
  const RealVector boundary_v{q(1), q(1), q(0)};
  const auto ok = validate_omega_hermitian(l3, HermitianTuple::scaled(boundary_v, id(1)));
  EXPECT_EQ(ok.status, HermitianCheck::certified);
  const RealVector outside_v{q(1), q(2), q(0)};
  const auto bad = validate_omega_hermitian(l3, HermitianTuple::scaled(outside_v, id(1)));
  EXPECT_EQ(bad.status, HermitianCheck::invalid);
  const auto zero = validate_omega_hermitian(ConeSpec::orthant(2), HermitianTuple::zero(2, 1));
  EXPECT_EQ(zero.status, HermitianCheck::invalid);
  // Tubes (m = 0) are trivially valid.
  EXPECT_TRUE(validate_omega_hermitian(ConeSpec::lorentz(4), HermitianTuple::zero(4, 0)).valid());
}

TEST(OmegaHermitian, OrthantNeedsSemidefiniteComponents) {
  const auto o2 = ConeSpec::orthant(2);
  EXPECT_EQ(validate_omega_hermitian(o2, HermitianTuple(2, {diag({1, 0}), diag({0, 1})})).status,
            HermitianCheck::certified);
  EXPECT_EQ(validate_omega_hermitian(o2, HermitianTuple(2, {diag({1, 1}), diag({1, -1})})).status,
            HermitianCheck::invalid);
  // Both PSD but a common null vector: H(e2, e2) = 0.
  EXPECT_EQ(validate_omega_hermitian(o2, HermitianTuple(2, {diag({1, 0}), diag({2, 0})})).status,
            HermitianCheck::invalid);
  EXPECT_THROW(validate_omega_hermitian(o2, HermitianTuple::zero(3, 1)), dimension_error);
}

TEST(OmegaHermitian, LorentzOutsideTheScaledFamilyIsSampled) {
  const auto l3 = ConeSpec::lorentz(3);
  // (|w1|^2 + |w2|^2, |w1|^2 - |w2|^2, 0) lies on or inside the cone.
  const HermitianTuple inside(2, {id(2), diag({1, -1}), ExactMatrix(2, 2)});
  const auto v = validate_omega_hermitian(l3, inside);
  EXPECT_EQ(v.status, HermitianCheck::sampled_only);
  // (|w1|^2 + |w2|^2, 2|w1|^2, 0) leaves the cone at w = e1.
  const HermitianTuple outside(2, {id(2), diag({2, 0}), ExactMatrix(2, 2)});
  EXPECT_EQ(validate_omega_hermitian(l3, outside).status, HermitianCheck::invalid);
}

TEST(PositiveCombination, Examples) {
  const auto o2 = ConeSpec::orthant(2);
  EXPECT_EQ(positive_combination(o2, HermitianTuple(2, {id(2), diag({2, 3})})).coefficients,
            (RealVector{q(1), q(0)}));
  EXPECT_EQ(positive_combination(ConeSpec::lorentz(3), HermitianTuple::scaled(RealVector{q(1), q(1), q(0)}, id(1)))
                .coefficients,
            (RealVector{q(1), q(0), q(0)}));
  const auto c = positive_combination(o2, HermitianTuple(2, {diag({1, 0}), diag({0, 1})}));
  EXPECT_TRUE(c.found);
  EXPECT_EQ(c.coefficients, (RealVector{q(1), q(1)}));
  const auto none = positive_combination(o2, HermitianTuple(2, {diag({1, 0}), diag({1, 0})}));
  EXPECT_FALSE(none.found);
  EXPECT_EQ(none.budget, 6u);
}

TEST(SkewSpace, CatalogInstances) {
  const HermitianTuple a(2, {id(2), diag({2, 3})});
  const HermitianTuple b(3, {id(3), diag({2, 3, 3})});
  const auto d6 = HermitianTuple::scaled(RealVector{q(1), q(1), q(0)}, id(1));
  const auto d8 = HermitianTuple::scaled(RealVector{q(1), q(1), q(0)}, id(2));
  const std::pair<const HermitianTuple*, std::size_t> cases[] = {{&a, 2}, {&b, 5}, {&d6, 1}, {&d8, 4}};
  for (const auto& [h, s] : cases) {
    const auto l = skew_space(*h);
    EXPECT_EQ(l.s(), s);
    expect_skew_exact(*h, l);
  }
  // For D8 the skew space is u_2: every element is skew-Hermitian.
  for (const auto& x : skew_space(d8).basis) EXPECT_EQ(adjoint(x), -x);
}

// For H = (I, diag(lambda)) the skew space is block-diagonal over equal
// eigenvalues: s = m + 2 * #{i < j : lambda_i = lambda_j}.
TEST(SkewSpace, DiagonalPairCount) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 1 + rng() % 4;
    std::vector<GaussianRational> lam;
    for (std::size_t i = 0; i < m; ++i) lam.emplace_back(static_cast<long>(rng() % 3));
    const HermitianTuple h(m, {id(m), ExactMatrix::diagonal(lam)});
    std::size_t equal = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) equal += lam[i] == lam[j];
    const auto l = skew_space(h);
    EXPECT_EQ(l.s(), m + 2 * equal);
    EXPECT_LE(l.s(), m * m);
    expect_skew_exact(h, l);
  }
}

// If s = m^2 then every component is a rational multiple of the positive
// combination.
TEST(SkewSpace, CommutantProperty) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 1 + rng() % 3, m = 1 + rng() % 2;
    ExactMatrix g(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) g(r, c) = GaussianRational(q(d(rng)), q(d(rng)));
    const ExactMatrix p = adjoint(g) * g + id(m);
    std::vector<ExactMatrix> comps;
    const bool scalar_family = t % 2 == 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (scalar_family) {
        comps.push_back(p * GaussianRational(static_cast<long>(rng() % 3)));
      } else {
        ExactMatrix e(m, m);
        e(0, 0) = static_cast<long>(rng() % 3);
        comps.push_back(p + e);
      }
    }
    if (scalar_family) comps[0] = p;
    const HermitianTuple h(m, comps);
    const auto l = skew_space(h);
    if (scalar_family) {
      EXPECT_EQ(l.s(), m * m);
    }
    if (l.s() != m * m) continue;
    const auto c = positive_combination(ConeSpec::orthant(k), h);
    ASSERT_TRUE(c.found);
    const auto pc = h.combination(c.coefficients);
    for (const auto& hj : h.components()) {
      const GaussianRational ratio = hj(0, 0) / pc(0, 0);
      EXPECT_TRUE(ratio.is_real());
      EXPECT_EQ(hj, pc * ratio);
    }
  }
}

TEST(PairNormalForm, Examples) {
  const auto a = pair_normal_form(id(2), diag({2, 3}));
  EXPECT_EQ(a.eigenvalues, (RealVector{q(3), q(2)}));
  EXPECT_EQ(a.equal_pair_count, 0u);
  EXPECT_EQ(a.distinct_pair_count, 1u);
  // n = 4: s = n^2 - 4n + 4 - 2 * (distinct pairs) = 2.
  EXPECT_EQ(skew_space(HermitianTuple(2, {id(2), diag({2, 3})})).s(), 16u - 16u + 4u - 2u * a.distinct_pair_count);
  const auto b = pair_normal_form(id(2), id(2));
  EXPECT_EQ(b.eigenvalues, (RealVector{q(1), q(1)}));
  EXPECT_EQ(b.equal_pair_count, 1u);
  EXPECT_EQ(b.distinct_pair_count, 0u);
}

// det(H2 - lambda H1) = (1 - lambda)(8 - 4 lambda) has roots 2 and 1.
TEST(PairNormalForm, DeterminantOracle) {
  const auto h1 = diag({1, 4}), h2 = diag({1, 8});
  const auto r = pair_normal_form(h1, h2);
  EXPECT_EQ(r.eigenvalues, (RealVector{q(2), q(1)}));
  for (const auto& lam : r.eigenvalues) {
    const auto m = h2 - h1 * GaussianRational(lam);
    EXPECT_TRUE((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero());
  }
}

// det(H2 - lambda H1) = (3 - 2 lambda)(1 - lambda) - (1 - lambda)^2
//                     = (1 - lambda)(2 - lambda).
TEST(PairNormalForm, ComplexPencilIsDiagonalized) {
  const auto h1 = mat2(2, I, -I, 1), h2 = mat2(3, I, -I, 1);
  const auto r = pair_normal_form(h1, h2);
  EXPECT_EQ(r.eigenvalues, (RealVector{q(2), q(1)}));
  const auto p = r.basis;
  const auto d1 = adjoint(p) * h1 * p, d2 = adjoint(p) * h2 * p;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const GaussianRational e1 = i == j ? GaussianRational(r.scales[i]) : GaussianRational(0);
      const GaussianRational e2 = i == j ? GaussianRational(r.scales[i] * r.eigenvalues[i]) : GaussianRational(0);
      EXPECT_EQ(d1(i, j), e1);
      EXPECT_EQ(d2(i, j), e2);
    }
}

TEST(PairNormalForm, Errors) {
  EXPECT_THROW(pair_normal_form(id(2), mat2(1, 1, 1, 0)), not_representable_error);
  EXPECT_THROW(pair_normal_form(diag({1, 0}), id(2)), validation_error);
  EXPECT_THROW(pair_normal_form(id(2), id(3)), dimension_error);
}
