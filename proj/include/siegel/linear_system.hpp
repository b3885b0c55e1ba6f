#ifndef SIEGEL_LINEAR_SYSTEM_HPP
#define SIEGEL_LINEAR_SYSTEM_HPP

// Real-linear systems in mixed real and complex unknowns. Every complex
// unknown occupies two consecutive real slots, real part first. Constraints
// are complex-valued real-linear forms (they may involve conjugates) and
// contribute their real and/or imaginary parts as rows.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <siegel/elimination.hpp>
#include <siegel/error.hpp>
#include <siegel/matrix.hpp>
#include <siegel/scalar.hpp>

namespace siegel {

enum class UnknownKind { real, complex };

struct UnknownBlock {
  UnknownKind kind = UnknownKind::real;
  std::size_t count = 0;
  std::size_t first_slot = 0;

  [[nodiscard]] std::size_t width() const { return kind == UnknownKind::complex ? 2 * count : count; }
  [[nodiscard]] std::size_t slot(std::size_t i) const {
    return first_slot + (kind == UnknownKind::complex ? 2 * i : i);
  }
};

/// A complex-valued form sum(alpha_s * v_s) over real slots v.
class LinearForm {
 public:
  explicit LinearForm(std::size_t slots) : coeff_(slots) {}

  /// Adds alpha * u_i.
  LinearForm& add(const UnknownBlock& b, std::size_t i, const GaussianRational& alpha) {
    if (alpha.is_zero()) return *this;
    check(b, i);
    const std::size_t s = b.slot(i);
    coeff_[s] += alpha;
    if (b.kind == UnknownKind::complex) coeff_[s + 1] += alpha * GaussianRational::i();
    return *this;
  }

  /// Adds alpha * conj(u_i).
  LinearForm& add_conj(const UnknownBlock& b, std::size_t i, const GaussianRational& alpha) {
    if (alpha.is_zero()) return *this;
    check(b, i);
    const std::size_t s = b.slot(i);
    coeff_[s] += alpha;
    if (b.kind == UnknownKind::complex) coeff_[s + 1] -= alpha * GaussianRational::i();
    return *this;
  }

  /// Adds s * other.
  LinearForm& add_scaled(const LinearForm& other, const GaussianRational& s) {
    if (other.coeff_.size() != coeff_.size()) throw internal_error("forms over different systems");
    for (std::size_t i = 0; i < coeff_.size(); ++i)
      if (!other.coeff_[i].is_zero()) coeff_[i] += other.coeff_[i] * s;
    return *this;
  }

  [[nodiscard]] const std::vector<GaussianRational>& coefficients() const { return coeff_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coeff_)
      if (!c.is_zero()) return false;
    return true;
  }

 private:
  void check(const UnknownBlock& b, std::size_t i) const {
    if (i >= b.count || b.first_slot + b.width() > coeff_.size()) throw internal_error("unknown index out of range");
  }

  std::vector<GaussianRational> coeff_;
};

class LinearSystem {
 public:
  UnknownBlock add_block(UnknownKind kind, std::size_t count) {
    if (!rows_.empty()) throw internal_error("unknown blocks must be declared before constraints");
    UnknownBlock b{kind, count, slots_};
    slots_ += b.width();
    return b;
  }

  [[nodiscard]] std::size_t slots() const { return slots_; }
  [[nodiscard]] LinearForm form() const { return LinearForm(slots_); }

  /// Requires the (complex) value of the form to vanish.
  void require_zero(const LinearForm& f) {
    require_real_part_zero(f);
    require_imag_part_zero(f);
  }

  void require_real_part_zero(const LinearForm& f) {
    RealVector row(slots_);
    bool any = false;
    for (std::size_t s = 0; s < slots_; ++s) {
      row[s] = f.coefficients()[s].re;
      any = any || sgn(row[s]) != 0;
    }
    if (any) rows_.push_back(std::move(row));
  }

  void require_imag_part_zero(const LinearForm& f) {
    RealVector row(slots_);
    bool any = false;
    for (std::size_t s = 0; s < slots_; ++s) {
      row[s] = f.coefficients()[s].im;
      any = any || sgn(row[s]) != 0;
    }
    if (any) rows_.push_back(std::move(row));
  }

  [[nodiscard]] std::size_t constraint_rows() const { return rows_.size(); }

  [[nodiscard]] RealMatrix matrix() const { return from_rows(rows_, slots_); }

  /// Canonical basis of the real solution space.
  [[nodiscard]] std::vector<RealVector> solve() const {
    if (rows_.empty()) return kernel_basis(RealMatrix(0, slots_));
    return kernel_basis(matrix());
  }

 private:
  std::size_t slots_ = 0;
  std::vector<RealVector> rows_;
};

/// Value of unknown `i` of block `b` in a real solution vector.
inline GaussianRational unknown_value(const UnknownBlock& b, std::size_t i, std::span<const Rational> v) {
  const std::size_t s = b.slot(i);
  if (b.kind == UnknownKind::complex) return {v[s], v[s + 1]};
  return GaussianRational(v[s]);
}

/// Real system equivalent to `linear * u + conjugate * conj(u) = 0`, where
/// column j of both matrices acts on unknown u_j of kind `kinds[j]`. Complex
/// unknowns become (re, im) column pairs in declaration order.
inline RealMatrix realify(const ExactMatrix& linear, const ExactMatrix& conjugate, std::span<const UnknownKind> kinds) {
  if (linear.cols() != kinds.size() || conjugate.cols() != kinds.size() || linear.rows() != conjugate.rows())
    throw dimension_error("realify: matrix shapes do not match the unknown tags");
  LinearSystem sys;
  std::vector<UnknownBlock> blocks;
  blocks.reserve(kinds.size());
  for (auto k : kinds) blocks.push_back(sys.add_block(k, 1));
  // Exactly two rows per equation (real part, then imaginary part).
  RealMatrix out(2 * linear.rows(), sys.slots());
  for (std::size_t r = 0; r < linear.rows(); ++r) {
    LinearForm f = sys.form();
    for (std::size_t j = 0; j < kinds.size(); ++j) {
      f.add(blocks[j], 0, linear(r, j));
      f.add_conj(blocks[j], 0, conjugate(r, j));
    }
    for (std::size_t s = 0; s < sys.slots(); ++s) {
      out(2 * r, s) = f.coefficients()[s].re;
      out(2 * r + 1, s) = f.coefficients()[s].im;
    }
  }
  return out;
}

/// Complex-linear case of realify: `linear * u = 0`.
inline RealMatrix realify(const ExactMatrix& linear, std::span<const UnknownKind> kinds) {
  return realify(linear, ExactMatrix(linear.rows(), linear.cols()), kinds);
}

}  // namespace siegel

#endif  // SIEGEL_LINEAR_SYSTEM_HPP
