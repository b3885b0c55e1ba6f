#ifndef SIEGEL_VECTOR_FIELD_HPP
#define SIEGEL_VECTOR_FIELD_HPP

// Holomorphic polynomial vector fields on C^k x C^m in the variables
// (z_1..z_k, w_1..w_m), with the constructors for each graded shape of the
// automorphism algebra of a Siegel domain.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <siegel/error.hpp>
#include <siegel/hermitian.hpp>
#include <siegel/matrix.hpp>
#include <siegel/scalar.hpp>

namespace siegel {

using Monomial = std::vector<unsigned>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}

  static Polynomial variable(std::size_t vars, std::size_t i) {
    Polynomial p(vars);
    Monomial e(vars, 0);
    e[i] = 1;
    p.add(e, GaussianRational(1));
    return p;
  }

  [[nodiscard]] std::size_t vars() const { return vars_; }
  [[nodiscard]] const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] GaussianRational coefficient(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  [[nodiscard]] Polynomial derivative(std::size_t i) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Monomial f = e;
      --f[i];
      out.add(f, c * GaussianRational(static_cast<long>(e[i])));
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  Polynomial& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Monomial e(a.vars_);
        for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t vars_ = 0;
  std::map<Monomial, GaussianRational> terms_;
};

/// sum_i X^i d/dv_i with v = (z, w).
class PolyVectorField {
 public:
  PolyVectorField() = default;
  PolyVectorField(std::size_t k, std::size_t m) : k_(k), m_(m), comps_(k + m, Polynomial(k + m)) {}

  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] std::size_t m() const { return m_; }
  [[nodiscard]] std::size_t vars() const { return k_ + m_; }
  [[nodiscard]] const Polynomial& component(std::size_t i) const { return comps_[i]; }
  Polynomial& component(std::size_t i) { return comps_[i]; }
  [[nodiscard]] const Polynomial& z(std::size_t j) const { return comps_[j]; }
  [[nodiscard]] const Polynomial& w(std::size_t p) const { return comps_[k_ + p]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& c : comps_) d = std::max(d, c.degree());
    return d;
  }

  /// X(f) = sum_i X^i df/dv_i.
  [[nodiscard]] Polynomial apply(const Polynomial& f) const {
    Polynomial out(vars());
    for (std::size_t i = 0; i < vars(); ++i) {
      if (comps_[i].is_zero()) continue;
      out += comps_[i] * f.derivative(i);
    }
    return out;
  }

  PolyVectorField& operator+=(const PolyVectorField& o) {
    same_shape(o);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
  }
  PolyVectorField& operator-=(const PolyVectorField& o) {
    same_shape(o);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
  }
  PolyVectorField& operator*=(const GaussianRational& s) {
    for (auto& c : comps_) c *= s;
    return *this;
  }
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(PolyVectorField a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

  /// Coordinates (re, im per coefficient) over all monomials of degree <= 2
  /// in a fixed order; used for exact span tests.
  [[nodiscard]] RealVector coordinates() const {
    const auto monos = low_degree_monomials(vars());
    RealVector out;
    out.reserve(2 * comps_.size() * monos.size());
    for (const auto& c : comps_) {
      if (c.degree() > 2) throw internal_error("vector field of degree above 2 has no graded coordinates");
      for (const auto& e : monos) {
        const auto v = c.coefficient(e);
        out.push_back(v.re);
        out.push_back(v.im);
      }
    }
    return out;
  }

  static std::vector<Monomial> low_degree_monomials(std::size_t vars) {
    std::vector<Monomial> out{Monomial(vars, 0)};
    for (std::size_t i = 0; i < vars; ++i) {
      Monomial e(vars, 0);
      e[i] = 1;
      out.push_back(e);
    }
    for (std::size_t i = 0; i < vars; ++i)
      for (std::size_t j = i; j < vars; ++j) {
        Monomial e(vars, 0);
        ++e[i];
        ++e[j];
        out.push_back(e);
      }
    return out;
  }

 private:
  void same_shape(const PolyVectorField& o) const {
    if (k_ != o.k_ || m_ != o.m_) throw dimension_error("vector fields live on different spaces");
  }

  std::size_t k_ = 0;
  std::size_t m_ = 0;
  std::vector<Polynomial> comps_;
};

/// [X, Y] = X(Y) - Y(X) componentwise. Graded inputs never produce terms of
/// degree above 2 that survive cancellation; such a result is an internal
/// error.
inline PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.k() != y.k() || x.m() != y.m()) throw dimension_error("vector fields live on different spaces");
  PolyVectorField out(x.k(), x.m());
  for (std::size_t i = 0; i < x.vars(); ++i) out.component(i) = x.apply(y.component(i)) - y.apply(x.component(i));
  if (out.degree() > 2) throw internal_error("Lie bracket left the space of fields of degree <= 2");
  return out;
}

namespace fields {

inline Monomial mono(std::size_t vars, std::initializer_list<std::size_t> idx) {
  Monomial e(vars, 0);
  for (auto i : idx) ++e[i];
  return e;
}

/// z d/dz + 1/2 w d/dw.
inline PolyVectorField euler(std::size_t k, std::size_t m) {
  PolyVectorField f(k, m);
  const std::size_t n = k + m;
  for (std::size_t j = 0; j < k; ++j) f.component(j).add(mono(n, {j}), GaussianRational(1));
  for (std::size_t p = 0; p < m; ++p) f.component(k + p).add(mono(n, {k + p}), GaussianRational(make_rational(1, 2)));
  return f;
}

/// a d/dz with a real.
inline PolyVectorField translation(std::size_t m, std::span<const Rational> a) {
  const std::size_t k = a.size();
  PolyVectorField f(k, m);
  for (std::size_t j = 0; j < k; ++j) f.component(j).add(Monomial(k + m, 0), GaussianRational(a[j]));
  return f;
}

/// 2i H(b, w) d/dz + b d/dw.
inline PolyVectorField half_translation(const HermitianTuple& h, std::span<const GaussianRational> b) {
  const std::size_t k = h.k(), m = h.m(), n = k + m;
  if (b.size() != m) throw dimension_error("b must have length m");
  PolyVectorField f(k, m);
  const GaussianRational two_i(Rational(0), Rational(2));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t q = 0; q < m; ++q) {
      GaussianRational c;
      for (std::size_t p = 0; p < m; ++p) c += b[p].conj() * h[j](p, q);
      f.component(j).add(mono(n, {k + q}), two_i * c);
    }
  for (std::size_t p = 0; p < m; ++p) f.component(k + p).add(Monomial(n, 0), b[p]);
  return f;
}

/// (A z) d/dz + (B w) d/dw.
inline PolyVectorField linear(const RealMatrix& a, const ExactMatrix& b) {
  const std::size_t k = a.rows(), m = b.rows(), n = k + m;
  PolyVectorField f(k, m);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l) f.component(j).add(mono(n, {l}), GaussianRational(a(j, l)));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) f.component(k + p).add(mono(n, {k + q}), b(p, q));
  return f;
}

/// 2i H(Phi(conj z), w) d/dz + (Phi(z) + c(w, w)) d/dw, with Phi an m x k
/// complex matrix and c[p][q][r] the coefficient of w_q w_r in component p.
inline PolyVectorField half_plus(const HermitianTuple& h, const ExactMatrix& phi,
                                 const std::vector<GaussianRational>& c) {
  const std::size_t k = h.k(), m = h.m(), n = k + m;
  PolyVectorField f(k, m);
  const GaussianRational two_i(Rational(0), Rational(2));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t q = 0; q < m; ++q) {
        GaussianRational s;
        for (std::size_t p = 0; p < m; ++p) s += phi(p, l).conj() * h[j](p, q);
        f.component(j).add(mono(n, {l, k + q}), two_i * s);
      }
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t l = 0; l < k; ++l) f.component(k + p).add(mono(n, {l}), phi(p, l));
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r) f.component(k + p).add(mono(n, {k + q, k + r}), c[(p * m + q) * m + r]);
  }
  return f;
}

/// a(z, z) d/dz + b(z, w) d/dw with a[l][i][j] the coefficient of z_i z_j in
/// component l and b[l][p][q] the coefficient of z_l w_q in component p.
inline PolyVectorField one_plus(std::size_t k, std::size_t m, const RealVector& a,
                                const std::vector<GaussianRational>& b) {
  const std::size_t n = k + m;
  PolyVectorField f(k, m);
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) f.component(l).add(mono(n, {i, j}), GaussianRational(a[(l * k + i) * k + j]));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) f.component(k + p).add(mono(n, {l, k + q}), b[(l * m + p) * m + q]);
  return f;
}

}  // namespace fields

}  // namespace siegel

#endif  // SIEGEL_VECTOR_FIELD_HPP
