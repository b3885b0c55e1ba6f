#ifndef SIEGEL_ELIMINATION_HPP
#define SIEGEL_ELIMINATION_HPP

// Exact row reduction. Rows are scaled to ring elements (Z or Z[i]) and
// reduced fraction-free (Bareiss, first nonzero pivot in each column); the
// echelon rows are then brought to reduced form over the field.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include <siegel/error.hpp>
#include <siegel/matrix.hpp>
#include <siegel/scalar.hpp>

namespace siegel {

namespace detail {

inline bool ring_is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool ring_is_zero(const GaussianInteger& a) { return a.is_zero(); }

inline Integer ring_divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline GaussianInteger ring_divexact(const GaussianInteger& a, const GaussianInteger& b) {
  Integer n = b.re * b.re + b.im * b.im;
  Integer re = a.re * b.re + a.im * b.im;
  Integer im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
    throw internal_error("inexact division in Bareiss elimination over Z[i]");
  return {ring_divexact(re, n), ring_divexact(im, n)};
}

template <class Field>
struct RingOf;
template <>
struct RingOf<Rational> {
  using type = Integer;
};
template <>
struct RingOf<GaussianRational> {
  using type = GaussianInteger;
};

inline std::vector<Integer> to_ring_row(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& x : row)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  Integer g = 0;
  for (const auto& x : row) {
    out.push_back(ring_divexact(x.get_num() * l, x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x = ring_divexact(x, g);
  return out;
}

inline std::vector<GaussianInteger> to_ring_row(std::span<const GaussianRational> row) {
  Integer l = 1;
  for (const auto& x : row) {
    if (sgn(x.re) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re.get_den_mpz_t());
    if (sgn(x.im) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im.get_den_mpz_t());
  }
  std::vector<GaussianInteger> out;
  out.reserve(row.size());
  Integer g = 0;
  for (const auto& x : row) {
    out.push_back({ring_divexact(x.re.get_num() * l, x.re.get_den()), ring_divexact(x.im.get_num() * l, x.im.get_den())});
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().im.get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x = {ring_divexact(x.re, g), ring_divexact(x.im, g)};
  return out;
}

inline Rational from_ring(const Integer& a) { return Rational(a); }
inline GaussianRational from_ring(const GaussianInteger& a) { return {Rational(a.re), Rational(a.im)}; }

template <class Ring>
bool row_is_zero(const std::vector<Ring>& r) {
  return std::all_of(r.begin(), r.end(), [](const Ring& x) { return ring_is_zero(x); });
}

}  // namespace detail

/// Reduced row echelon form: `rows[i]` has a 1 in column `pivots[i]` and
/// zeros in every other pivot column.
template <class Field>
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Field>> rows;

  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free echelon form followed by back substitution.
template <class Field>
Echelon<Field> reduced_echelon(const Matrix<Field>& m) {
  using Ring = typename detail::RingOf<Field>::type;
  std::vector<std::vector<Ring>> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = detail::to_ring_row(m.row(i));
    if (!detail::row_is_zero(r)) a.push_back(std::move(r));
  }
  // Identical scaled rows add nothing; dropping them keeps large assembled
  // systems cheap.
  std::sort(a.begin(), a.end(), [](const std::vector<Ring>& x, const std::vector<Ring>& y) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if constexpr (std::is_same_v<Ring, Integer>) {
        if (x[j] != y[j]) return x[j] < y[j];
      } else {
        if (x[j].re != y[j].re) return x[j].re < y[j].re;
        if (x[j].im != y[j].im) return x[j].im < y[j].im;
      }
    }
    return false;
  });
  a.erase(std::unique(a.begin(), a.end()), a.end());

  const std::size_t rows = a.size();
  const std::size_t cols = m.cols();
  Echelon<Field> out;
  out.cols = cols;
  Ring prev{};
  if constexpr (std::is_same_v<Ring, Integer>)
    prev = 1;
  else
    prev = Ring{Integer(1), Integer(0)};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && detail::ring_is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = detail::ring_divexact(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      a[i][c] = Ring{};
      if constexpr (!std::is_same_v<Ring, Integer>) a[i][c] = Ring{Integer(0), Integer(0)};
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }

  out.rows.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto& row = out.rows[i];
    row.reserve(cols);
    Field inv = Field(1) / detail::from_ring(a[i][out.pivots[i]]);
    for (std::size_t j = 0; j < cols; ++j) {
      if (j < out.pivots[i]) {
        row.emplace_back(0);
      } else {
        row.push_back(detail::from_ring(a[i][j]) * inv);
      }
    }
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = out.pivots[i];
    for (std::size_t u = 0; u < i; ++u) {
      Field f = out.rows[u][pc];
      if (f == Field(0)) continue;
      for (std::size_t j = pc; j < cols; ++j) out.rows[u][j] -= f * out.rows[i][j];
    }
  }
  return out;
}

/// Rank over the field of the entries.
template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return reduced_echelon(m).rank();
}

/// Canonical basis of the right null space: one vector per free column in
/// ascending order, with a 1 in that column and 0 in the other free columns.
template <class Field>
std::vector<std::vector<Field>> kernel_basis(const Echelon<Field>& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Field>> basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Field> v(e.cols, Field(0));
    v[f] = Field(1);
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Field>
std::vector<std::vector<Field>> kernel_basis(const Matrix<Field>& m) {
  return kernel_basis(reduced_echelon(m));
}

template <class Field>
Matrix<Field> from_rows(const std::vector<std::vector<Field>>& rows, std::size_t cols) {
  Matrix<Field> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw dimension_error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

/// Canonical basis (reduced echelon rows) of the span of the given vectors.
template <class Field>
std::vector<std::vector<Field>> span_basis(const std::vector<std::vector<Field>>& vectors, std::size_t dim) {
  return reduced_echelon(from_rows(vectors, dim)).rows;
}

/// Incrementally maintained reduced row space, for repeated membership tests
/// against one fixed span.
template <class Field>
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] std::size_t ambient() const { return dim_; }

  /// Returns true when `v` was independent of the current span.
  bool insert(std::vector<Field> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && v[p] == Field(0)) ++p;
    if (p == dim_) return false;
    Field inv = Field(1) / v[p];
    for (auto& x : v) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Field f = rows_[i][p];
      if (f == Field(0)) continue;
      for (std::size_t j = 0; j < dim_; ++j) rows_[i][j] -= f * v[j];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto at = static_cast<std::ptrdiff_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  [[nodiscard]] bool contains(std::vector<Field> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Field& x) { return x == Field(0); });
  }

 private:
  void reduce(std::vector<Field>& v) const {
    if (v.size() != dim_) throw dimension_error("vector length does not match row space");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Field f = v[pivots_[i]];
      if (f == Field(0)) continue;
      for (std::size_t j = pivots_[i]; j < dim_; ++j) v[j] -= f * rows_[i][j];
    }
  }

  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Field>> rows_;
};

}  // namespace siegel

#endif  // SIEGEL_ELIMINATION_HPP
