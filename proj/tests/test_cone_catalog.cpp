#include <gtest/gtest.h>

#include <random>

#include <siegel/cone.hpp>
#include <siegel/elimination.hpp>
#include <siegel/hermitian.hpp>

using namespace siegel;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

RealMatrix lorentz_metric(std::size_t k) {
  RealMatrix j(k, k);
  j(0, 0) = 1;
  for (std::size_t i = 1; i < k; ++i) j(i, i) = -1;
  return j;
}

RealVector flat(const RealMatrix& m) { return m.data(); }

// The real span of a list of matrices, as a row space of flattened entries.
std::size_t span_dim(const std::vector<RealMatrix>& ms) {
  if (ms.empty()) return 0;
  std::vector<RealVector> rows;
  for (const auto& m : ms) rows.push_back(flat(m));
  return rank(from_rows(rows, rows[0].size()));
}

// Cayley transform (I - tA/2)^{-1} (I + tA/2), an exact element of the group
// generated by A whenever A preserves the metric infinitesimally.
RealMatrix cayley(const RealMatrix& a, const Rational& t) {
  const std::size_t k = a.rows();
  const auto half = a * (t / 2);
  const auto inv = detail::inverse(to_complex(RealMatrix::identity(k) - half));
  return real_part(inv * to_complex(RealMatrix::identity(k) + half));
}

Rational lorentz_q(const RealVector& x) {
  Rational s = x[0] * x[0];
  for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * x[i];
  return s;
}

}  // namespace

TEST(ConeCatalog, AlgebraDimensions) {
  const std::size_t expected[] = {2, 3, 4, 4, 5, 7};
  for (int i = 1; i <= 6; ++i) EXPECT_EQ(automorphism_algebra_basis(catalog_cone(i)).dim(), expected[i - 1]) << i;
  EXPECT_EQ(automorphism_algebra_basis(ConeSpec::half_line()).dim(), 1u);
  EXPECT_EQ(automorphism_algebra_basis(ConeSpec::lorentz(5)).dim(), 11u);
}

TEST(ConeCatalog, BoundAndSharpness) {
  EXPECT_EQ(dimension_bound(1), q(1));
  EXPECT_EQ(dimension_bound(3), q(4));
  EXPECT_EQ(dimension_bound(4), q(7));
  for (int i = 1; i <= 6; ++i) {
    const auto c = catalog_cone(i);
    const Rational d(static_cast<long>(automorphism_algebra_basis(c).dim()));
    EXPECT_LE(d, dimension_bound(c.dim()));
    // In dimension 2 the orthant is a Lorentz cone, so it is sharp too.
    EXPECT_EQ(d == dimension_bound(c.dim()), i == 1 || i == 3 || i == 6) << i;
  }
  for (std::size_t k = 3; k <= 6; ++k)
    EXPECT_EQ(Rational(static_cast<long>(automorphism_algebra_basis(ConeSpec::lorentz(k)).dim())), dimension_bound(k));
}

// Oracle: g(Lorentz(k)) is the conformal algebra of the metric J, i.e. the
// solutions of A^T J + J A = c J. Solve that system independently and compare
// spans.
TEST(ConeCatalog, LorentzAlgebraIsConformalAlgebra) {
  for (std::size_t k = 3; k <= 5; ++k) {
    const auto j = lorentz_metric(k);
    // Unknowns: A (k*k entries) and c. Equation entries (r, s) of A^T J + J A - c J.
    RealMatrix sys(k * k, k * k + 1);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) {
        const std::size_t row = r * k + s;
        sys(row, s * k + r) += j(s, s);  // (A^T J)_{rs} = A_{sr} J_{ss}
        sys(row, r * k + s) += j(r, r);  // (J A)_{rs} = J_{rr} A_{rs}
        sys(row, k * k) -= j(r, s);
      }
    std::vector<RealMatrix> conformal;
    for (const auto& v : kernel_basis(sys)) {
      RealMatrix a(k, k);
      for (std::size_t e = 0; e < k * k; ++e) a(e / k, e % k) = v[e];
      conformal.push_back(a);
    }
    const auto ours = automorphism_algebra_basis(ConeSpec::lorentz(k)).basis;
    EXPECT_EQ(span_dim(conformal), ours.size());
    auto both = conformal;
    both.insert(both.end(), ours.begin(), ours.end());
    EXPECT_EQ(span_dim(both), ours.size());
  }
}

TEST(ConeCatalog, AnnihilatorCutsOutTheAlgebra) {
  for (int i = 1; i <= 6; ++i) {
    const auto c = catalog_cone(i);
    const auto ann = algebra_annihilator(c);
    const auto basis = automorphism_algebra_basis(c).basis;
    EXPECT_EQ(ann.size() + basis.size(), c.dim() * c.dim());
    for (const auto& b : basis)
      for (const auto& f : ann) {
        Rational s = 0;
        for (std::size_t e = 0; e < f.size(); ++e) s += f[e] * b.data()[e];
        EXPECT_EQ(s, 0);
      }
  }
  // E_12 does not preserve the orthant.
  RealMatrix e12(2, 2);
  e12(0, 1) = 1;
  bool detected = false;
  for (const auto& f : algebra_annihilator(ConeSpec::orthant(2))) {
    Rational s = 0;
    for (std::size_t e = 0; e < f.size(); ++e) s += f[e] * e12.data()[e];
    detected = detected || sgn(s) != 0;
  }
  EXPECT_TRUE(detected);
}

// Exact group elements near the identity: Cayley transforms of the boosts
// and rotations at t = +-1/1000 preserve the Lorentz form, hence the cone
// and its boundary.
TEST(ConeCatalog, GroupElementsPreserveTheCone) {
  const auto cone = ConeSpec::lorentz(3);
  const auto basis = automorphism_algebra_basis(cone).basis;
  const auto pts = sample_interior_points(cone, 6, 5);
  const RealVector boundary{q(5), q(3), q(4)};
  for (std::size_t b = 1; b < basis.size(); ++b)
    for (const auto& t : {q(1, 1000), q(-1, 1000), q(1)}) {
      const auto g = cayley(basis[b], t);
      for (const auto& x : pts) {
        const auto y = g * x;
        EXPECT_EQ(lorentz_q(y), lorentz_q(x));
        EXPECT_EQ(contains(cone, y), Membership::interior);
      }
      const auto y = g * boundary;
      EXPECT_EQ(lorentz_q(y), 0);
      EXPECT_EQ(contains(cone, y), Membership::boundary);
    }
}

TEST(ConeCatalog, Membership) {
  const auto l3 = ConeSpec::lorentz(3);
  EXPECT_EQ(contains(l3, RealVector{q(2), q(1), q(1)}), Membership::interior);
  EXPECT_EQ(contains(l3, RealVector{q(1), q(1), q(0)}), Membership::boundary);
  EXPECT_EQ(contains(l3, RealVector{q(1), q(2), q(0)}), Membership::outside);
  EXPECT_EQ(contains(l3, RealVector{q(-2), q(1), q(1)}), Membership::outside);
  const auto o3 = ConeSpec::orthant(3);
  EXPECT_EQ(contains(o3, RealVector{q(1), q(1, 7), q(3)}), Membership::interior);
  EXPECT_EQ(contains(o3, RealVector{q(1), q(0), q(3)}), Membership::boundary);
  EXPECT_EQ(contains(o3, RealVector{q(1), q(-1, 7), q(3)}), Membership::outside);
  const auto o5 = catalog_cone(5);
  EXPECT_EQ(contains(o5, RealVector{q(2), q(1), q(0), q(1, 2)}), Membership::interior);
  EXPECT_EQ(contains(o5, RealVector{q(2), q(1), q(0), q(0)}), Membership::boundary);
  EXPECT_THROW(contains(l3, RealVector{q(1)}), dimension_error);
  EXPECT_TRUE(in_closed_dual(l3, RealVector{q(1), q(1), q(0)}));
  EXPECT_FALSE(in_closed_dual(l3, RealVector{q(0), q(1), q(0)}));
}

TEST(ConeCatalog, MembershipIsScalingInvariant) {
  std::mt19937_64 rng(99);
  for (int i = 1; i <= 6; ++i) {
    const auto c = catalog_cone(i);
    for (int t = 0; t < 20; ++t) {
      RealVector x(c.dim());
      for (auto& e : x) e = make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      const Rational s = make_rational(1 + static_cast<long>(rng() % 50), 1 + static_cast<long>(rng() % 50));
      RealVector y = x;
      for (auto& e : y) e *= s;
      EXPECT_EQ(contains(c, x), contains(c, y));
    }
  }
}

TEST(ConeCatalog, SamplesAreInteriorAndSeeded) {
  for (int i = 1; i <= 6; ++i) {
    const auto c = catalog_cone(i);
    const auto a = sample_interior_points(c, 10, 42);
    EXPECT_EQ(a, sample_interior_points(c, 10, 42));
    EXPECT_NE(a, sample_interior_points(c, 10, 43));
    for (const auto& x : a) EXPECT_EQ(contains(c, x), Membership::interior);
    EXPECT_EQ(contains(c, canonical_interior_point(c)), Membership::interior);
  }
}

TEST(ConeCatalog, Transitivity) {
  for (int i = 1; i <= 6; ++i) {
    const auto c = catalog_cone(i);
    const auto g = automorphism_algebra_basis(c).basis;
    const auto r = infinitesimal_transitivity(g, c, default_base_points(c, 5, 1));
    EXPECT_EQ(r.verdict, TransitivityVerdict::transitive_certified) << i;
    EXPECT_EQ(r.points.size(), 6u);
  }
  const auto o2 = ConeSpec::orthant(2);
  const std::vector<RealMatrix> scalars{RealMatrix::identity(2)};
  EXPECT_EQ(infinitesimal_transitivity(scalars, o2, default_base_points(o2, 3, 1)).verdict,
            TransitivityVerdict::not_transitive);
  const std::vector<RealVector> bad{RealVector{q(0), q(1)}};
  EXPECT_THROW(infinitesimal_transitivity(scalars, o2, bad), input_error);
}

TEST(ConeCatalog, ProductsAndErrors) {
  const auto p = ConeSpec::product({ConeSpec::lorentz(3), ConeSpec::half_line()});
  EXPECT_EQ(p, catalog_cone(5));
  EXPECT_EQ(p.dim(), 4u);
  EXPECT_EQ(ConeSpec::product({ConeSpec::half_line(), ConeSpec::half_line()}), ConeSpec::orthant(2));
  EXPECT_THROW(ConeSpec::lorentz(2), input_error);
  EXPECT_THROW(ConeSpec::orthant(0), input_error);
  EXPECT_THROW(catalog_cone(7), input_error);
}
