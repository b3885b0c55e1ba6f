#ifndef SIEGEL_HERMITIAN_HPP
#define SIEGEL_HERMITIAN_HPP

// C^k-valued Hermitian forms H(w, w') = (w^* H_j w')_j on C^m: anti-linear in
// the first slot, linear in the second.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <siegel/cone.hpp>
#include <siegel/elimination.hpp>
#include <siegel/error.hpp>
#include <siegel/linear_system.hpp>
#include <siegel/matrix.hpp>
#include <siegel/scalar.hpp>

namespace siegel {

class HermitianTuple {
 public:
  HermitianTuple() = default;

  /// Components must be Hermitian m x m matrices. With m = 0 the form is
  /// zero and `components` holds k empty matrices.
  HermitianTuple(std::size_t m, std::vector<ExactMatrix> components) : m_(m), components_(std::move(components)) {
    for (std::size_t j = 0; j < components_.size(); ++j) {
      const auto& h = components_[j];
      if (h.rows() != m_ || h.cols() != m_)
        throw dimension_error("component " + std::to_string(j + 1) + " is not " + std::to_string(m_) + "x" +
                              std::to_string(m_));
      if (!is_hermitian(h))
        throw validation_error("hermitian", "component " + std::to_string(j + 1) + " is not Hermitian");
    }
  }

  static HermitianTuple zero(std::size_t k, std::size_t m) {
    return HermitianTuple(m, std::vector<ExactMatrix>(k, ExactMatrix(m, m)));
  }

  /// H(w, w) = v * Q(w, w) for a single m x m Hermitian Q.
  static HermitianTuple scaled(std::span<const Rational> v, const ExactMatrix& q) {
    std::vector<ExactMatrix> comps;
    for (const auto& vj : v) comps.push_back(q * GaussianRational(vj));
    return HermitianTuple(q.rows(), std::move(comps));
  }

  [[nodiscard]] std::size_t k() const { return components_.size(); }
  [[nodiscard]] std::size_t m() const { return m_; }
  [[nodiscard]] const std::vector<ExactMatrix>& components() const { return components_; }
  [[nodiscard]] const ExactMatrix& operator[](std::size_t j) const { return components_[j]; }

  /// H(w, w') in C^k.
  [[nodiscard]] ComplexVector operator()(std::span<const GaussianRational> w,
                                         std::span<const GaussianRational> wp) const {
    if (w.size() != m_ || wp.size() != m_) throw dimension_error("vector length does not match fiber dimension");
    ComplexVector out(k());
    for (std::size_t j = 0; j < k(); ++j)
      for (std::size_t p = 0; p < m_; ++p) {
        if (w[p].is_zero()) continue;
        GaussianRational acc;
        for (std::size_t q = 0; q < m_; ++q) acc += components_[j](p, q) * wp[q];
        out[j] += w[p].conj() * acc;
      }
    return out;
  }

  /// Real vector H(w, w).
  [[nodiscard]] RealVector quadratic(std::span<const GaussianRational> w) const {
    RealVector out;
    for (auto& z : (*this)(w, w)) out.push_back(z.re);
    return out;
  }

  /// sum_j c_j H_j.
  [[nodiscard]] ExactMatrix combination(std::span<const Rational> c) const {
    if (c.size() != k()) throw dimension_error("combination length does not match k");
    ExactMatrix s(m_, m_);
    for (std::size_t j = 0; j < k(); ++j) s += components_[j] * GaussianRational(c[j]);
    return s;
  }

  /// Block-diagonal sum: the form of a product of Siegel domains.
  [[nodiscard]] static HermitianTuple direct_sum(const HermitianTuple& a, const HermitianTuple& b) {
    std::vector<ExactMatrix> comps;
    for (const auto& h : a.components_) comps.push_back(siegel::direct_sum(h, ExactMatrix(b.m_, b.m_)));
    for (const auto& h : b.components_) comps.push_back(siegel::direct_sum(ExactMatrix(a.m_, a.m_), h));
    return HermitianTuple(a.m_ + b.m_, std::move(comps));
  }

  friend bool operator==(const HermitianTuple&, const HermitianTuple&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<ExactMatrix> components_;
};

/// Exact definiteness by symmetric elimination with diagonal pivots.
inline bool is_positive_definite(ExactMatrix a) {
  if (!is_hermitian(a)) return false;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a(i, i).re) <= 0) return false;
    const GaussianRational d = a(i, i);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a(r, i).is_zero()) continue;
      const GaussianRational f = a(r, i) / d;
      for (std::size_t c = i; c < n; ++c) a(r, c) -= f * a(i, c);
    }
  }
  return true;
}

inline bool is_positive_semidefinite(ExactMatrix a) {
  if (!is_hermitian(a)) return false;
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (sgn(a(i, i).re) < 0) return false;
      if (!piv && sgn(a(i, i).re) > 0) piv = i;
    }
    if (!piv) {
      // Remaining diagonal is zero: a PSD matrix then has zero rows there.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !a(i, j).is_zero()) return false;
      return true;
    }
    const std::size_t p = *piv;
    const GaussianRational d = a(p, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || r == p || a(r, p).is_zero()) continue;
      const GaussianRational f = a(r, p) / d;
      for (std::size_t c = 0; c < n; ++c)
        if (!done[c]) a(r, c) -= f * a(p, c);
    }
    done[p] = true;
  }
  return true;
}

struct PositiveCombination {
  bool found = false;
  RealVector coefficients;
  /// Largest l1 norm of the integer grid that was searched.
  std::size_t budget = 0;
};

/// Integer vectors of the closed dual cone ordered by l1 norm, then
/// lexicographically descending; returns the first whose combination of the
/// components is positive definite.
inline PositiveCombination positive_combination(const ConeSpec& cone, const HermitianTuple& h,
                                                std::size_t budget = 0) {
  const std::size_t k = cone.dim();
  if (h.k() != k) throw dimension_error("form has " + std::to_string(h.k()) + " components, cone dimension is " +
                                        std::to_string(k));
  if (budget == 0) budget = k + 4;
  PositiveCombination out;
  out.budget = budget;
  std::vector<long> c(k, 0);
  // Enumerates all c with sum |c_j| == remaining over positions >= pos.
  auto search = [&](auto&& self, std::size_t pos, long remaining) -> bool {
    if (pos + 1 == k) {
      for (long v : {remaining, -remaining}) {
        c[pos] = v;
        RealVector cr;
        for (long x : c) cr.emplace_back(x);
        if (in_closed_dual(cone, cr) && is_positive_definite(h.combination(cr))) {
          out.coefficients = cr;
          return true;
        }
        if (remaining == 0) break;
      }
      return false;
    }
    for (long v = remaining; v >= -remaining; --v) {
      c[pos] = v;
      if (self(self, pos + 1, remaining - (v < 0 ? -v : v))) return true;
    }
    return false;
  };
  for (std::size_t l1 = 1; l1 <= budget; ++l1) {
    if (search(search, 0, static_cast<long>(l1))) {
      out.found = true;
      return out;
    }
  }
  return out;
}

enum class HermitianCheck { certified, sampled_only, invalid };

inline std::string to_string(HermitianCheck c) {
  switch (c) {
    case HermitianCheck::certified: return "certified";
    case HermitianCheck::sampled_only: return "sampled-only";
    case HermitianCheck::invalid: return "invalid";
  }
  return "?";
}

struct OmegaHermitianVerdict {
  HermitianCheck status = HermitianCheck::invalid;
  /// Positive combination found in the closed dual cone, when valid.
  RealVector combination;
  std::string reason;

  [[nodiscard]] bool valid() const { return status != HermitianCheck::invalid; }
};

struct SamplingPolicy {
  std::size_t samples = 256;
  std::uint64_t seed = 20240601;
};

namespace detail {

/// For a Lorentz block: components equal to v_j * Q with Q PSD, v real.
inline std::optional<std::pair<RealVector, ExactMatrix>> scaled_family(const HermitianTuple& h, std::size_t first,
                                                                       std::size_t count) {
  std::optional<std::size_t> base;
  for (std::size_t j = first; j < first + count; ++j)
    if (!h[j].is_zero()) {
      base = j;
      break;
    }
  const std::size_t m = h.m();
  if (!base) return std::make_pair(RealVector(count, Rational(0)), ExactMatrix(m, m));
  const ExactMatrix& q0 = h[*base];
  std::size_t ref = 0;
  while (q0.data()[ref].is_zero()) ++ref;
  RealVector v;
  for (std::size_t j = first; j < first + count; ++j) {
    const GaussianRational ratio = h[j].data()[ref] / q0.data()[ref];
    if (!ratio.is_real() || !(h[j] == q0 * ratio)) return std::nullopt;
    v.push_back(ratio.re);
  }
  return std::make_pair(v, q0);
}

}  // namespace detail

/// Checks H(w, w) in closure(cone) \ {0} for w != 0. Half-line components
/// must be PSD. A Lorentz block is certified exactly when it has the form
/// v * Q(w, w) with Q semidefinite, otherwise it is only sampled. Nonvanishing
/// is certified by a positive-definite combination from the closed dual.
inline OmegaHermitianVerdict validate_omega_hermitian(const ConeSpec& cone, const HermitianTuple& h,
                                                      const SamplingPolicy& policy = {}) {
  if (h.k() != cone.dim())
    throw dimension_error("form has " + std::to_string(h.k()) + " components, cone dimension is " +
                          std::to_string(cone.dim()));
  OmegaHermitianVerdict out;
  out.status = HermitianCheck::certified;
  const auto off = cone.offsets();
  const std::size_t m = h.m();
  for (std::size_t a = 0; a < cone.atoms().size(); ++a) {
    const auto& atom = cone.atoms()[a];
    const std::size_t o = off[a];
    if (atom.kind == AtomKind::half_line) {
      if (!is_positive_semidefinite(h[o])) {
        out.status = HermitianCheck::invalid;
        out.reason = "component " + std::to_string(o + 1) + " is not positive semidefinite";
        return out;
      }
      continue;
    }
    const ConeSpec block = ConeSpec::lorentz(atom.dim);
    if (auto fam = detail::scaled_family(h, o, atom.dim)) {
      auto [v, q] = *fam;
      if (!q.is_zero()) {
        if (!is_positive_semidefinite(q)) {
          if (!is_positive_semidefinite(-q)) {
            out.status = HermitianCheck::invalid;
            out.reason = "Lorentz block is v times an indefinite form";
            return out;
          }
          for (auto& x : v) x = -x;
        }
        if (contains(block, v) == Membership::outside) {
          out.status = HermitianCheck::invalid;
          out.reason = "Lorentz block direction v lies outside the closed cone";
          return out;
        }
      }
      continue;
    }
    // General block: sample H(w, w) on Gaussian-rational vectors.
    std::mt19937_64 rng(policy.seed);
    auto small = [&rng] { return static_cast<long>(rng() % 11) - 5; };
    for (std::size_t n = 0; n < policy.samples; ++n) {
      ComplexVector w(m);
      for (auto& x : w) x = GaussianRational(Rational(small()), Rational(small()));
      const auto val = h.quadratic(w);
      RealVector part(val.begin() + static_cast<std::ptrdiff_t>(o),
                      val.begin() + static_cast<std::ptrdiff_t>(o + atom.dim));
      if (contains(block, part) == Membership::outside) {
        out.status = HermitianCheck::invalid;
        out.reason = "H(w,w) leaves the closed Lorentz block at a sampled w";
        return out;
      }
    }
    out.status = HermitianCheck::sampled_only;
  }
  auto comb = positive_combination(cone, h);
  if (!comb.found) {
    out.status = HermitianCheck::invalid;
    out.reason = "H(w,w) = 0 for some nonzero w (no positive-definite combination in the dual cone)";
    return out;
  }
  out.combination = comb.coefficients;
  return out;
}

struct SkewSpaceBasis {
  std::vector<ExactMatrix> basis;

  [[nodiscard]] std::size_t s() const { return basis.size(); }
};

/// Matrices B with H_j B + B^* H_j = 0 for every component.
inline SkewSpaceBasis skew_space(const HermitianTuple& h) {
  const std::size_t m = h.m();
  LinearSystem sys;
  const auto b = sys.add_block(UnknownKind::complex, m * m);
  for (const auto& hj : h.components())
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        LinearForm f = sys.form();
        for (std::size_t r = 0; r < m; ++r) {
          f.add(b, r * m + q, hj(p, r));       // (H_j B)_pq
          f.add_conj(b, r * m + p, hj(r, q));  // (B^* H_j)_pq
        }
        sys.require_zero(f);
      }
  SkewSpaceBasis out;
  for (const auto& v : sys.solve()) {
    ExactMatrix bm(m, m);
    for (std::size_t i = 0; i < m * m; ++i) bm(i / m, i % m) = unknown_value(b, i, v);
    out.basis.push_back(std::move(bm));
  }
  return out;
}

struct PairNormalForm {
  /// Generalized eigenvalues of (H2, H1), descending, with multiplicity.
  RealVector eigenvalues;
  /// Unordered pairs {i, j} with equal eigenvalues.
  std::size_t equal_pair_count = 0;
  /// Unordered pairs {i, j} with distinct eigenvalues.
  std::size_t distinct_pair_count = 0;
  /// Columns diagonalize both forms: P^* H1 P = diag(scales),
  /// P^* H2 P = diag(scales_i * eigenvalues_i).
  ExactMatrix basis;
  RealVector scales;
};

namespace detail {

/// det(t I - M) by Faddeev-LeVerrier, coefficients in ascending degree.
inline ComplexVector characteristic_polynomial(const ExactMatrix& mtx) {
  const std::size_t n = mtx.rows();
  ComplexVector c(n + 1);
  c[n] = GaussianRational(1);
  ExactMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix next = mtx * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    ExactMatrix prod = mtx * mk;
    GaussianRational tr;
    for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    c[n - k] = -tr / GaussianRational(Rational(static_cast<long>(k)));
  }
  return c;
}

inline std::vector<Integer> divisors(Integer a) {
  a = abs(a);
  if (a > Integer("1000000000000")) throw not_representable_error("polynomial coefficients too large to factor");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  return out;
}

inline Rational eval_poly(const RealVector& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Divides p by (t - r); p(r) must be zero.
inline RealVector deflate(const RealVector& p, const Rational& r) {
  RealVector q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

inline ExactMatrix inverse(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = GaussianRational(1);
  }
  auto e = reduced_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw dimension_error("matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

}  // namespace detail

/// Simultaneous diagonalization of a positive-definite H1 and a Hermitian H2
/// with rational generalized eigenvalues.
inline PairNormalForm pair_normal_form(const ExactMatrix& h1, const ExactMatrix& h2) {
  if (!h1.square() || !h2.square() || h1.rows() != h2.rows()) throw dimension_error("pair must be square, same size");
  if (!is_hermitian(h2)) throw validation_error("hermitian", "second form is not Hermitian");
  if (!is_positive_definite(h1)) throw validation_error("positive-definite", "first form is not positive definite");
  const std::size_t n = h1.rows();
  const auto cp = detail::characteristic_polynomial(detail::inverse(h1) * h2);
  RealVector poly;
  for (const auto& c : cp) {
    if (!c.is_real()) throw internal_error("characteristic polynomial of a Hermitian pencil is not real");
    poly.push_back(c.re);
  }

  RealVector roots;
  while (poly.size() > 1 && sgn(poly[0]) == 0) {
    roots.emplace_back(0);
    poly.erase(poly.begin());
  }
  if (poly.size() > 1) {
    Integer l = 1;
    for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ip;
    for (const auto& c : poly) ip.push_back(c.get_num() * (l / c.get_den()));
    const auto ps = detail::divisors(ip.front());
    const auto qs = detail::divisors(ip.back());
    std::vector<Rational> cands;
    for (const auto& p : ps)
      for (const auto& q : qs) {
        Rational r(p, q);
        r.canonicalize();
        cands.push_back(r);
        cands.push_back(-r);
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands)
      while (poly.size() > 1 && sgn(detail::eval_poly(poly, r)) == 0) {
        roots.push_back(r);
        poly = detail::deflate(poly, r);
      }
  }
  if (roots.size() != n) throw not_representable_error("generalized eigenvalues are not all rational");
  std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) { return a > b; });

  PairNormalForm out;
  out.eigenvalues = roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) (roots[i] == roots[j] ? out.equal_pair_count : out.distinct_pair_count)++;

  std::vector<ComplexVector> cols;
  for (std::size_t i = 0; i < n;) {
    const Rational lam = roots[i];
    const auto space = kernel_basis(h2 - h1 * GaussianRational(lam));
    std::vector<ComplexVector> local;
    for (auto v : space) {
      for (const auto& u : local) {
        GaussianRational num, den;
        const auto h1v = h1 * v;
        const auto h1u = h1 * u;
        for (std::size_t t = 0; t < n; ++t) {
          num += u[t].conj() * h1v[t];
          den += u[t].conj() * h1u[t];
        }
        const GaussianRational f = num / den;
        for (std::size_t t = 0; t < n; ++t) v[t] -= f * u[t];
      }
      local.push_back(std::move(v));
    }
    cols.insert(cols.end(), local.begin(), local.end());
    while (i < n && roots[i] == lam) ++i;
  }
  out.basis = ExactMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out.basis(i, j) = cols[j][i];
    const auto h1c = h1 * cols[j];
    GaussianRational d;
    for (std::size_t t = 0; t < n; ++t) d += cols[j][t].conj() * h1c[t];
    out.scales.push_back(d.re);
  }
  return out;
}

}  // namespace siegel

#endif  // SIEGEL_HERMITIAN_HPP
