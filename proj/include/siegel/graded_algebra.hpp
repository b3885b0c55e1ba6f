#ifndef SIEGEL_GRADED_ALGEBRA_HPP
#define SIEGEL_GRADED_ALGEBRA_HPP

// The graded Lie algebra g = g_-1 + g_-1/2 + g_0 + g_1/2 + g_1 of complete
// holomorphic vector fields on a Siegel domain of the second kind
//   S(cone, H) = {(z, w) in C^k x C^m : Im z - H(w, w) in cone}.
// g_-1 and g_-1/2 are explicit; g_0, g_1/2 and g_1 are the real solution
// spaces of linear systems assembled below.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <siegel/cone.hpp>
#include <siegel/elimination.hpp>
#include <siegel/error.hpp>
#include <siegel/hermitian.hpp>
#include <siegel/linear_system.hpp>
#include <siegel/matrix.hpp>
#include <siegel/scalar.hpp>
#include <siegel/vector_field.hpp>

namespace siegel {

struct SiegelDomainSpec {
  ConeSpec cone;
  HermitianTuple form;
  /// Outcome of the Omega-Hermitian check; nullopt when validation was skipped.
  std::optional<OmegaHermitianVerdict> validation;

  [[nodiscard]] std::size_t k() const { return cone.dim(); }
  [[nodiscard]] std::size_t m() const { return form.m(); }
  [[nodiscard]] std::size_t n() const { return k() + m(); }

  friend bool operator==(const SiegelDomainSpec& a, const SiegelDomainSpec& b) {
    return a.cone == b.cone && a.form == b.form;
  }
};

/// Builds a domain spec; with `validate` set, a form that is not
/// Omega-Hermitian is rejected.
inline SiegelDomainSpec make_domain(ConeSpec cone, HermitianTuple form, bool validate = true,
                                    const SamplingPolicy& policy = {}) {
  if (form.k() != cone.dim())
    throw dimension_error("form has " + std::to_string(form.k()) + " components, cone dimension is " +
                          std::to_string(cone.dim()));
  SiegelDomainSpec spec{std::move(cone), std::move(form), std::nullopt};
  if (validate) {
    auto verdict = validate_omega_hermitian(spec.cone, spec.form, policy);
    if (!verdict.valid()) throw validation_error("omega-hermitian", verdict.reason);
    spec.validation = std::move(verdict);
  }
  return spec;
}

/// Product domain: product cone with the block-diagonal form.
inline SiegelDomainSpec product_domain(const SiegelDomainSpec& a, const SiegelDomainSpec& b, bool validate = true) {
  return make_domain(ConeSpec::product({a.cone, b.cone}), HermitianTuple::direct_sum(a.form, b.form), validate);
}

/// (A, B) with B associated to A: A H(w, w') = H(Bw, w') + H(w, Bw').
struct AssociatedPair {
  RealMatrix a;
  ExactMatrix b;

  friend bool operator==(const AssociatedPair&, const AssociatedPair&) = default;
};

/// Phi is m x k; c[(p*m + q)*m + r] is the coefficient of w_q w_r in c_p.
struct HalfPlusGenerator {
  ExactMatrix phi;
  std::vector<GaussianRational> c;

  friend bool operator==(const HalfPlusGenerator&, const HalfPlusGenerator&) = default;
};

/// a[(l*k + i)*k + j] is the coefficient of z_i z_j in a_l;
/// b[(l*m + p)*m + q] is the coefficient of z_l w_q in b_p.
struct OnePlusGenerator {
  RealVector a;
  std::vector<GaussianRational> b;

  friend bool operator==(const OnePlusGenerator&, const OnePlusGenerator&) = default;
};

namespace detail {

inline ComplexVector unit(std::size_t m, std::size_t i, const GaussianRational& s = GaussianRational(1)) {
  ComplexVector v(m);
  v[i] = s;
  return v;
}

/// e_i, e_i + e_j and e_i + i e_j (i < j). Values of a holomorphic quadratic
/// or Hermitian form on this set determine the form.
inline std::vector<ComplexVector> polarization_set(std::size_t m) {
  std::vector<ComplexVector> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(unit(m, i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto v = unit(m, i);
      v[j] = GaussianRational(1);
      out.push_back(v);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto v = unit(m, i);
      v[j] = GaussianRational::i();
      out.push_back(v);
    }
  return out;
}

/// The polarization set together with i e_i: spans C^m over R, as needed for
/// constraints that are only real-linear in w.
inline std::vector<ComplexVector> real_spanning_set(std::size_t m) {
  auto out = polarization_set(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(unit(m, i, GaussianRational::i()));
  return out;
}

/// Rows forcing the k x k matrix whose (row, col) entry is entries[row*k+col]
/// into g(cone).
inline void require_in_algebra(LinearSystem& sys, const std::vector<RealVector>& annihilator,
                               const std::vector<LinearForm>& entries, bool imaginary_part) {
  for (const auto& f : annihilator) {
    LinearForm acc = sys.form();
    for (std::size_t e = 0; e < entries.size(); ++e)
      if (sgn(f[e]) != 0) acc.add_scaled(entries[e], GaussianRational(f[e]));
    if (imaginary_part) {
      sys.require_imag_part_zero(acc);
    } else {
      sys.require_real_part_zero(acc);
    }
  }
}

}  // namespace detail

struct GZero {
  /// Canonical basis of g_0 as associated pairs.
  std::vector<AssociatedPair> basis;
  /// Canonical basis of the A-projection (the Lie algebra of G(cone, H)).
  std::vector<RealMatrix> stabilizer;
};

/// g_0: pairs (A, B) with A in g(cone) and sum_l A_jl H_l = B^* H_j + H_j B.
/// Unknowns: A (k x k real, row-major), then B (m x m complex, row-major).
inline GZero g_zero(const SiegelDomainSpec& spec) {
  const std::size_t k = spec.k(), m = spec.m();
  const auto& h = spec.form;
  LinearSystem sys;
  const auto ua = sys.add_block(UnknownKind::real, k * k);
  const auto ub = sys.add_block(UnknownKind::complex, m * m);
  const auto ann = algebra_annihilator(spec.cone);

  std::vector<LinearForm> a_entries;
  for (std::size_t e = 0; e < k * k; ++e) a_entries.push_back(std::move(sys.form().add(ua, e, GaussianRational(1))));
  detail::require_in_algebra(sys, ann, a_entries, false);

  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        LinearForm f = sys.form();
        for (std::size_t l = 0; l < k; ++l) f.add(ua, j * k + l, h[l](p, q));
        for (std::size_t r = 0; r < m; ++r) {
          f.add(ub, r * m + q, -h[j](p, r));
          f.add_conj(ub, r * m + p, -h[j](r, q));
        }
        sys.require_zero(f);
      }

  GZero out;
  std::vector<RealVector> a_parts;
  for (const auto& v : sys.solve()) {
    AssociatedPair pair{RealMatrix(k, k), ExactMatrix(m, m)};
    RealVector ap(k * k);
    for (std::size_t e = 0; e < k * k; ++e) {
      pair.a(e / k, e % k) = v[ua.slot(e)];
      ap[e] = v[ua.slot(e)];
    }
    for (std::size_t e = 0; e < m * m; ++e) pair.b(e / m, e % m) = unknown_value(ub, e, v);
    a_parts.push_back(std::move(ap));
    out.basis.push_back(std::move(pair));
  }
  if (!a_parts.empty())
    for (const auto& row : span_basis(a_parts, k * k)) out.stabilizer.emplace_back(k, k, row);
  return out;
}

/// Lie algebra of G(cone, H): the A-components of g_0.
inline std::vector<RealMatrix> stabilizer_algebra(const SiegelDomainSpec& spec) { return g_zero(spec).stabilizer; }

/// g_1/2: pairs (Phi, c) with Phi_w = [x -> Im H(w, Phi x)] in g(cone) for all
/// w, c symmetric, and H(w, c(w', w')) = 2i H(Phi(H(w', w)), w').
/// Unknowns: Phi (m x k complex, row-major), then c (m x m x m complex).
inline std::vector<HalfPlusGenerator> g_half(const SiegelDomainSpec& spec) {
  const std::size_t k = spec.k(), m = spec.m();
  if (m == 0) return {};
  const auto& h = spec.form;
  LinearSystem sys;
  const auto uphi = sys.add_block(UnknownKind::complex, m * k);
  const auto uc = sys.add_block(UnknownKind::complex, m * m * m);
  const auto ann = algebra_annihilator(spec.cone);
  const GaussianRational one(1);
  const GaussianRational two_i(Rational(0), Rational(2));

  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = q + 1; r < m; ++r) {
        LinearForm f = sys.form();
        f.add(uc, (p * m + q) * m + r, one).add(uc, (p * m + r) * m + q, -one);
        sys.require_zero(f);
      }

  // (Phi_w)_{jl} = Im sum_{p,q} conj(w_p) H_j[p][q] Phi[q][l].
  for (const auto& w : detail::real_spanning_set(m)) {
    std::vector<LinearForm> entries;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        LinearForm f = sys.form();
        for (std::size_t p = 0; p < m; ++p) {
          if (w[p].is_zero()) continue;
          for (std::size_t q = 0; q < m; ++q) f.add(uphi, q * k + l, w[p].conj() * h[j](p, q));
        }
        entries.push_back(std::move(f));
      }
    detail::require_in_algebra(sys, ann, entries, true);
  }

  // w = e_s (the condition is anti-linear in w), w' over the polarization set.
  for (std::size_t s = 0; s < m; ++s)
    for (const auto& wp : detail::polarization_set(m)) {
      // H_l(e_s, w') for each l.
      ComplexVector hsw(k);
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t q = 0; q < m; ++q) hsw[l] += h[l](s, q) * wp[q];
      for (std::size_t j = 0; j < k; ++j) {
        LinearForm f = sys.form();
        for (std::size_t p = 0; p < m; ++p) {
          if (h[j](s, p).is_zero()) continue;
          for (std::size_t q = 0; q < m; ++q)
            for (std::size_t r = 0; r < m; ++r) {
              const GaussianRational wq = wp[q] * wp[r];
              if (wq.is_zero()) continue;
              f.add(uc, (p * m + q) * m + r, h[j](s, p) * wq);
            }
        }
        // - 2i sum_l H_l(e_s, w') (Phi e_l)^* H_j w'
        for (std::size_t l = 0; l < k; ++l) {
          if (hsw[l].is_zero()) continue;
          for (std::size_t p = 0; p < m; ++p) {
            GaussianRational hjw;
            for (std::size_t q = 0; q < m; ++q) hjw += h[j](p, q) * wp[q];
            if (hjw.is_zero()) continue;
            f.add_conj(uphi, p * k + l, -two_i * hsw[l] * hjw);
          }
        }
        sys.require_zero(f);
      }
    }

  std::vector<HalfPlusGenerator> out;
  for (const auto& v : sys.solve()) {
    HalfPlusGenerator g{ExactMatrix(m, k), std::vector<GaussianRational>(m * m * m)};
    for (std::size_t e = 0; e < m * k; ++e) g.phi(e / k, e % k) = unknown_value(uphi, e, v);
    for (std::size_t e = 0; e < m * m * m; ++e) g.c[e] = unknown_value(uc, e, v);
    out.push_back(std::move(g));
  }
  return out;
}

/// g_1: pairs (a, b) with a symmetric, A_x = a(x, .) in g(cone), B_x = b(x, .)/2
/// associated to A_x with Im tr B_x = 0, B_{w,w'} = [x -> Im H(w', b(x, w))]
/// in g(cone), and H(w, b(H(w', w''), w'')) = H(b(H(w'', w), w'), w'').
/// Unknowns: a (k x k x k real), then b (k x m x m complex).
inline std::vector<OnePlusGenerator> g_one(const SiegelDomainSpec& spec) {
  const std::size_t k = spec.k(), m = spec.m();
  const auto& h = spec.form;
  LinearSystem sys;
  const auto ua = sys.add_block(UnknownKind::real, k * k * k);
  const auto ub = sys.add_block(UnknownKind::complex, k * m * m);
  const auto ann = algebra_annihilator(spec.cone);
  const GaussianRational one(1);
  const GaussianRational half(make_rational(1, 2));
  auto ai = [k](std::size_t l, std::size_t i, std::size_t j) { return (l * k + i) * k + j; };
  auto bi = [m](std::size_t l, std::size_t p, std::size_t q) { return (l * m + p) * m + q; };

  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        LinearForm f = sys.form();
        f.add(ua, ai(l, i, j), one).add(ua, ai(l, j, i), -one);
        sys.require_zero(f);
      }

  for (std::size_t i = 0; i < k; ++i) {
    // (A_{e_i})_{lj} = a[l][i][j]
    std::vector<LinearForm> entries;
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < k; ++j) entries.push_back(std::move(sys.form().add(ua, ai(l, i, j), one)));
    detail::require_in_algebra(sys, ann, entries, false);

    // sum_l (A_{e_i})_{jl} H_l = B^* H_j + H_j B with B = b[i]/2.
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          LinearForm f = sys.form();
          for (std::size_t l = 0; l < k; ++l) f.add(ua, ai(j, i, l), h[l](p, q));
          for (std::size_t r = 0; r < m; ++r) {
            f.add(ub, bi(i, r, q), -half * h[j](p, r));
            f.add_conj(ub, bi(i, r, p), -half * h[j](r, q));
          }
          sys.require_zero(f);
        }

    LinearForm tr = sys.form();
    for (std::size_t p = 0; p < m; ++p) tr.add(ub, bi(i, p, p), half);
    sys.require_imag_part_zero(tr);
  }

  // (B_{w,w'})_{jl} = Im sum conj(w'_p) H_j[p][q] b[l][q][r] w_r.
  const auto wr = detail::real_spanning_set(m);
  for (const auto& w : wr)
    for (const auto& wp : wr) {
      std::vector<LinearForm> entries;
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          LinearForm f = sys.form();
          for (std::size_t p = 0; p < m; ++p) {
            if (wp[p].is_zero()) continue;
            for (std::size_t q = 0; q < m; ++q) {
              const GaussianRational hpq = wp[p].conj() * h[j](p, q);
              if (hpq.is_zero()) continue;
              for (std::size_t r = 0; r < m; ++r)
                if (!w[r].is_zero()) f.add(ub, bi(l, q, r), hpq * w[r]);
            }
          }
          entries.push_back(std::move(f));
        }
      detail::require_in_algebra(sys, ann, entries, true);
    }

  // w = e_s, w' = e_t (anti-linear in both), w'' over the polarization set.
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      for (const auto& w2 : detail::polarization_set(m)) {
        // hw[l] = H_l w''
        std::vector<ComplexVector> hw(k, ComplexVector(m));
        for (std::size_t l = 0; l < k; ++l)
          for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) hw[l][p] += h[l](p, q) * w2[q];
        for (std::size_t j = 0; j < k; ++j) {
          LinearForm f = sys.form();
          for (std::size_t l = 0; l < k; ++l) {
            // (H_l w'')_t * sum_{p,q} H_j[s][p] b[l][p][q] w''_q
            if (!hw[l][t].is_zero())
              for (std::size_t p = 0; p < m; ++p) {
                if (h[j](s, p).is_zero()) continue;
                for (std::size_t q = 0; q < m; ++q)
                  if (!w2[q].is_zero()) f.add(ub, bi(l, p, q), hw[l][t] * h[j](s, p) * w2[q]);
              }
            // - (H_l w'')_s * sum_p conj(b[l][p][t]) (H_j w'')_p
            if (!hw[l][s].is_zero())
              for (std::size_t p = 0; p < m; ++p)
                if (!hw[j][p].is_zero()) f.add_conj(ub, bi(l, p, t), -hw[l][s] * hw[j][p]);
          }
          sys.require_zero(f);
        }
      }

  std::vector<OnePlusGenerator> out;
  for (const auto& v : sys.solve()) {
    OnePlusGenerator g{RealVector(k * k * k), std::vector<GaussianRational>(k * m * m)};
    for (std::size_t e = 0; e < k * k * k; ++e) g.a[e] = v[ua.slot(e)];
    for (std::size_t e = 0; e < k * m * m; ++e) g.b[e] = unknown_value(ub, e, v);
    out.push_back(std::move(g));
  }
  return out;
}

/// 3k^2/2 - (2n + 5/2)k + n^2 + 4n + 1: upper bound for d(S) in terms of n, k.
inline Rational bound_rhs(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw input_error("bound requires 1 <= k <= n");
  const Rational nn(static_cast<long>(n)), kk(static_cast<long>(k));
  Rational r = make_rational(3, 2) * kk * kk - (2 * nn + make_rational(5, 2)) * kk + nn * nn + 4 * nn + 1;
  r.canonicalize();
  return r;
}

/// Every basis element of the algebra, grouped by grade.
struct GradedAlgebra {
  SiegelDomainSpec spec;
  std::size_t cone_algebra_dim = 0;
  SkewSpaceBasis skew;
  GZero zero;
  std::vector<HalfPlusGenerator> half;
  std::vector<OnePlusGenerator> one;

  [[nodiscard]] std::array<std::size_t, 5> dims() const {
    return {spec.k(), 2 * spec.m(), zero.basis.size(), half.size(), one.size()};
  }
  [[nodiscard]] std::size_t total() const {
    std::size_t d = 0;
    for (auto x : dims()) d += x;
    return d;
  }
};

inline GradedAlgebra compute_algebra(const SiegelDomainSpec& spec) {
  GradedAlgebra g{spec, automorphism_algebra_basis(spec.cone).dim(), skew_space(spec.form), g_zero(spec),
                  g_half(spec), g_one(spec)};
  return g;
}

/// Grades as twice the eigenvalue of ad(euler): -2, -1, 0, 1, 2.
struct GradedField {
  int twice_grade = 0;
  PolyVectorField field;
};

inline std::vector<GradedField> generator_fields(const GradedAlgebra& g) {
  const std::size_t k = g.spec.k(), m = g.spec.m();
  std::vector<GradedField> out;
  for (std::size_t j = 0; j < k; ++j) {
    RealVector a(k, Rational(0));
    a[j] = 1;
    out.push_back({-2, fields::translation(m, a)});
  }
  for (std::size_t p = 0; p < m; ++p)
    for (const auto& s : {GaussianRational(1), GaussianRational::i()})
      out.push_back({-1, fields::half_translation(g.spec.form, detail::unit(m, p, s))});
  for (const auto& pr : g.zero.basis) out.push_back({0, fields::linear(pr.a, pr.b)});
  for (const auto& x : g.half) out.push_back({1, fields::half_plus(g.spec.form, x.phi, x.c)});
  for (const auto& x : g.one) out.push_back({2, fields::one_plus(k, m, x.a, x.b)});
  return out;
}

struct GradingCheck {
  std::size_t brackets_checked = 0;
  std::size_t closure_failures = 0;
  std::size_t euler_failures = 0;

  [[nodiscard]] bool ok() const { return closure_failures == 0 && euler_failures == 0; }
};

/// [X, Y] must lie in the real span of the computed generators of grade
/// mu + nu (and vanish outside -1..1); [euler, X] must equal nu X.
inline GradingCheck check_grading(const GradedAlgebra& g) {
  const auto gens = generator_fields(g);
  const std::size_t k = g.spec.k(), m = g.spec.m();
  const auto euler = fields::euler(k, m);
  const std::size_t width = PolyVectorField(k, m).coordinates().size();
  std::vector<RowSpace<Rational>> spans(5, RowSpace<Rational>(width));
  for (const auto& x : gens) spans[static_cast<std::size_t>(x.twice_grade + 2)].insert(x.field.coordinates());

  GradingCheck out;
  for (const auto& x : gens) {
    const auto e = lie_bracket(euler, x.field);
    if (!(e == x.field * GaussianRational(make_rational(x.twice_grade, 2)))) ++out.euler_failures;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const int grade = gens[i].twice_grade + gens[j].twice_grade;
      ++out.brackets_checked;
      PolyVectorField br;
      try {
        br = lie_bracket(gens[i].field, gens[j].field);
      } catch (const internal_error&) {
        ++out.closure_failures;
        continue;
      }
      if (grade < -2 || grade > 2) {
        if (!br.is_zero()) ++out.closure_failures;
        continue;
      }
      if (!spans[static_cast<std::size_t>(grade + 2)].contains(br.coordinates())) ++out.closure_failures;
    }
  return out;
}

struct BoundCheck {
  std::string label;
  std::string relation;  // "<=" or "="
  Rational lhs;
  Rational rhs;

  [[nodiscard]] bool holds() const { return relation == "=" ? lhs == rhs : lhs <= rhs; }

  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

struct ReportOptions {
  std::size_t samples = 8;
  std::uint64_t seed = 1;
  bool generators = false;
};

struct GradedReport {
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::string cone;
  /// d_-1, d_-1/2, d_0, d_1/2, d_1.
  std::array<std::size_t, 5> dims{};
  std::size_t s = 0;
  std::size_t cone_algebra_dim = 0;
  std::size_t stabilizer_dim = 0;
  std::size_t total = 0;
  std::vector<BoundCheck> bounds;
  TransitivityVerdict homogeneity = TransitivityVerdict::not_transitive;
  std::size_t homogeneity_points = 0;
  /// "certified", "sampled-only" or "unvalidated".
  std::string validation = "unvalidated";
  std::optional<GradedAlgebra> algebra;  // kept when generators were requested

  [[nodiscard]] bool bounds_hold() const {
    for (const auto& b : bounds)
      if (!b.holds()) return false;
    return true;
  }
};

inline std::vector<BoundCheck> evaluate_bounds(const GradedAlgebra& g) {
  const std::size_t k = g.spec.k(), m = g.spec.m(), n = g.spec.n();
  const auto d = g.dims();
  auto q = [](std::size_t x) { return Rational(static_cast<long>(x)); };
  const std::size_t s = g.skew.s(), cone = g.cone_algebra_dim, stab = g.zero.stabilizer.size();
  const std::size_t total = g.total();
  return {
      {"cone-algebra-bound", "<=", q(cone), dimension_bound(k)},
      {"half-dim-bound", "<=", q(d[3]), q(2 * m)},
      {"one-dim-bound", "<=", q(d[4]), q(k)},
      {"g0-splitting", "=", q(d[2]), q(s + stab)},
      {"g0-bound", "<=", q(d[2]), q(s + cone)},
      {"graded-sum-bound", "<=", q(total), q(k + 2 * m + s + cone + d[3] + d[4])},
      {"coarse-bound", "<=", q(total), q(2 * k + 4 * m + s + cone)},
      {"skew-bound", "<=", q(s), q(m * m)},
      {"fiber-bound", "<=", q(total), q(2 * k + 4 * m + m * m + cone)},
      {"nk-bound", "<=", q(total), bound_rhs(n, k)},
  };
}

inline GradedReport report(const SiegelDomainSpec& spec, const ReportOptions& opt = {}) {
  GradedAlgebra g = compute_algebra(spec);
  GradedReport r;
  r.k = spec.k();
  r.m = spec.m();
  r.n = spec.n();
  r.cone = spec.cone.describe();
  r.dims = g.dims();
  r.s = g.skew.s();
  r.cone_algebra_dim = g.cone_algebra_dim;
  r.stabilizer_dim = g.zero.stabilizer.size();
  r.total = g.total();
  r.bounds = evaluate_bounds(g);
  const auto pts = default_base_points(spec.cone, opt.samples, opt.seed);
  r.homogeneity = infinitesimal_transitivity(g.zero.stabilizer, spec.cone, pts).verdict;
  r.homogeneity_points = pts.size();
  if (spec.validation) r.validation = to_string(spec.validation->status);
  if (opt.generators) r.algebra = std::move(g);
  return r;
}

}  // namespace siegel

#endif  // SIEGEL_GRADED_ALGEBRA_HPP
