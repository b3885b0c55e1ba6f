#include <gtest/gtest.h>

#include <siegel/catalog.hpp>
#include <siegel/elimination.hpp>
#include <siegel/graded_algebra.hpp>
#include <siegel/vector_field.hpp>

using namespace siegel;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }
const GaussianRational I = GaussianRational::i();

SiegelDomainSpec dom(const std::string& name, RealVector p = {}) { return named_domain(name, p).spec; }

std::size_t span_dim(const std::vector<RealMatrix>& ms) {
  if (ms.empty()) return 0;
  std::vector<RealVector> rows;
  for (const auto& m : ms) rows.push_back(m.data());
  return rank(from_rows(rows, rows[0].size()));
}

bool same_span(const std::vector<RealMatrix>& a, const std::vector<RealMatrix>& b) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_dim(a) == span_dim(b) && span_dim(both) == span_dim(a);
}

RealMatrix m3(std::initializer_list<long> e) {
  RealMatrix m(3, 3);
  std::size_t i = 0;
  for (long x : e) m(i / 3, i % 3) = x, ++i;
  return m;
}

}  // namespace

TEST(LieBracket, TrivialExamples) {
  const auto h = dom("ball", {q(3)}).form;
  const ComplexVector b{GaussianRational(1), I};
  const auto x = fields::half_translation(h, b);
  EXPECT_TRUE(lie_bracket(x, x).is_zero());
  const RealVector a1{q(1)}, a2{q(5, 2)};
  EXPECT_TRUE(lie_bracket(fields::translation(2, a1), fields::translation(2, a2)).is_zero());
}

// Oracle by hand for the ball in C^3 (k = 1, H = |w|^2), b = e1, b' = i e1:
// X_b has z-part 2i w1, X_b' has z-part 2 w1 and w-parts e1, i e1, so
// [X_b, X_b']_z = 1 * 2 - i * 2i = 4 = 2i (H(b', b) - H(b, b')).
TEST(LieBracket, HalfTranslationsCloseOnTranslations) {
  const auto h = dom("ball", {q(3)}).form;
  const ComplexVector b{GaussianRational(1), GaussianRational(0)}, bp{I, GaussianRational(0)};
  const auto br = lie_bracket(fields::half_translation(h, b), fields::half_translation(h, bp));
  const RealVector four{q(4)};
  EXPECT_EQ(br, fields::translation(2, four));
  const auto hb = h(bp, b)[0] - h(b, bp)[0];
  EXPECT_EQ(GaussianRational(q(0), q(2)) * hb, GaussianRational(4));
}

TEST(EulerField, Eigenvalues) {
  const auto e = fields::euler(1, 2);
  EXPECT_TRUE(lie_bracket(e, e).is_zero());
  const RealVector a{q(1)};
  const auto t = fields::translation(2, a);
  EXPECT_EQ(lie_bracket(e, t), t * GaussianRational(-1));
  const auto g = compute_algebra(dom("ball", {q(3)}));
  ASSERT_EQ(g.half.size(), 4u);
  for (const auto& x : g.half) {
    const auto f = fields::half_plus(g.spec.form, x.phi, x.c);
    EXPECT_EQ(lie_bracket(e, f), f * GaussianRational(q(1, 2)));
  }
}

TEST(LieBracket, DegreeOverflowIsInternalError) {
  // [z^2 d/dz, z w d/dz] = -z^2 w d/dz has degree 3.
  PolyVectorField x(1, 1), y(1, 1);
  x.component(0).add(fields::mono(2, {0, 0}), GaussianRational(1));
  y.component(0).add(fields::mono(2, {0, 1}), GaussianRational(1));
  EXPECT_THROW(lie_bracket(x, y), internal_error);
}

TEST(GZero, D6MatchesTheDisplayedStabilizer) {
  const auto spec = dom("D6");
  const auto g0 = g_zero(spec);
  EXPECT_EQ(g0.basis.size(), 4u);
  EXPECT_EQ(g0.stabilizer.size(), 3u);
  // (lambda, p, q) family: [[l, p, q], [p, l, q], [q, -q, l]].
  const std::vector<RealMatrix> family{m3({1, 0, 0, 0, 1, 0, 0, 0, 1}), m3({0, 1, 0, 1, 0, 0, 0, 0, 0}),
                                       m3({0, 0, 1, 0, 0, 1, 1, -1, 0})};
  EXPECT_TRUE(same_span(g0.stabilizer, family));
}

TEST(GZero, PairsAreAssociated) {
  for (const auto& spec : {dom("D6"), dom("D8"), dom("D3"), dom("D5", {q(1), q(2), q(0)}), dom("ball", {q(3)})}) {
    const auto ann = algebra_annihilator(spec.cone);
    for (const auto& pr : g_zero(spec).basis) {
      for (const auto& f : ann) {
        Rational s = 0;
        for (std::size_t e = 0; e < f.size(); ++e) s += f[e] * pr.a.data()[e];
        EXPECT_EQ(s, 0);
      }
      for (std::size_t j = 0; j < spec.k(); ++j) {
        ExactMatrix lhs(spec.m(), spec.m());
        for (std::size_t l = 0; l < spec.k(); ++l) lhs += spec.form[l] * GaussianRational(pr.a(j, l));
        EXPECT_EQ(lhs, adjoint(pr.b) * spec.form[j] + spec.form[j] * pr.b);
      }
    }
  }
}

TEST(GZero, Examples) {
  const auto d8 = g_zero(dom("D8"));
  EXPECT_EQ(d8.basis.size(), 7u);
  EXPECT_EQ(d8.stabilizer.size(), 3u);
  const auto t = g_zero(dom("tube", {q(4)}));
  EXPECT_EQ(t.basis.size(), 4u);
  const auto d2 = stabilizer_algebra(dom("D2", {q(4)}));
  ASSERT_EQ(d2.size(), 1u);
  EXPECT_TRUE(same_span(d2, {RealMatrix::identity(2)}));
  const auto d5 = stabilizer_algebra(dom("D5", {q(1), q(2), q(3)}));
  ASSERT_EQ(d5.size(), 1u);
  EXPECT_TRUE(same_span(d5, {RealMatrix::identity(3)}));
  // Exactly two nonzero entries: diagonal matrices with lambda_1 = lambda_2.
  EXPECT_EQ(stabilizer_algebra(dom("D5", {q(1), q(1), q(0)})).size(), 2u);
}

TEST(GHalf, Examples) {
  EXPECT_EQ(g_half(dom("D3", {q(1), q(1), q(0), q(1)})).size(), 0u);
  EXPECT_EQ(g_half(dom("D6")).size(), 0u);
  for (long n = 2; n <= 4; ++n) EXPECT_EQ(g_half(dom("ball", {q(n)})).size(), static_cast<std::size_t>(2 * (n - 1)));
}

TEST(GHalf, CoefficientTensorIsSymmetric) {
  for (const auto& spec : {dom("ball", {q(3)}), dom("D1", {q(4)})}) {
    const std::size_t m = spec.m();
    for (const auto& x : g_half(spec))
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) EXPECT_EQ(x.c[(p * m + a) * m + b], x.c[(p * m + b) * m + a]);
  }
}

TEST(GOne, Examples) {
  EXPECT_EQ(g_one(dom("D6")).size(), 1u);
  EXPECT_EQ(g_one(dom("T4")).size(), 4u);
  EXPECT_EQ(g_one(dom("D3", {q(1), q(1), q(0), q(1)})).size(), 0u);
  for (const auto& x : g_one(dom("T3"))) {
    const std::size_t k = 3;
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) EXPECT_EQ(x.a[(l * k + i) * k + j], x.a[(l * k + j) * k + i]);
  }
}

TEST(Report, Examples) {
  EXPECT_EQ(report(dom("tube", {q(5)})).total, 13u);
  EXPECT_EQ(report(dom("tube", {q(6)})).total, 15u);
  EXPECT_EQ(report(dom("tube", {q(4)})).total, 12u);
  const auto d6 = report(dom("D6"));
  EXPECT_EQ(d6.dims, (std::array<std::size_t, 5>{3, 2, 4, 0, 1}));
  EXPECT_EQ(d6.total, 10u);
  EXPECT_TRUE(d6.bounds_hold());
  EXPECT_EQ(report(dom("ball", {q(4)})).total, 24u);
}

TEST(Report, TubesHaveNoFiberDirections) {
  for (int i = 1; i <= 6; ++i) {
    const auto r = report(dom("tube", {q(i)}));
    EXPECT_EQ(r.dims[1], 0u);
    EXPECT_EQ(r.dims[3], 0u);
    EXPECT_EQ(r.dims[2], r.cone_algebra_dim);
  }
}

TEST(Bounds, RightHandSide) {
  EXPECT_EQ(bound_rhs(5, 4), q(20));
  EXPECT_EQ(bound_rhs(6, 3), q(31));
  EXPECT_EQ(bound_rhs(5, 3), q(22));
  EXPECT_EQ(bound_rhs(4, 4), q(15));
  EXPECT_EQ(bound_rhs(3, 1), q(15));
  EXPECT_THROW(bound_rhs(3, 4), input_error);
  EXPECT_THROW(bound_rhs(3, 0), input_error);
}

TEST(Grading, ClosureOnCatalogDomains) {
  for (const auto& spec : {dom("D6"), dom("D8"), dom("T3"), dom("ball", {q(3)}), dom("D3"), dom("D1", {q(4)})}) {
    const auto c = check_grading(compute_algebra(spec));
    EXPECT_TRUE(c.ok()) << c.closure_failures << " closure, " << c.euler_failures << " euler";
    EXPECT_GT(c.brackets_checked, 0u);
  }
}

TEST(Domain, ConstructionErrors) {
  EXPECT_THROW(make_domain(ConeSpec::orthant(2), HermitianTuple::zero(3, 1)), dimension_error);
  try {
    make_domain(ConeSpec::orthant(2), HermitianTuple::zero(2, 1));
    FAIL() << "expected a validation error";
  } catch (const validation_error& e) {
    EXPECT_EQ(e.condition(), "omega-hermitian");
  }
  const auto unchecked = make_domain(ConeSpec::orthant(2), HermitianTuple::zero(2, 1), false);
  EXPECT_FALSE(unchecked.validation.has_value());
  const auto p = product_domain(dom("ball", {q(1)}), dom("T3"));
  EXPECT_EQ(p.k(), 4u);
  EXPECT_EQ(p.m(), 0u);
}
