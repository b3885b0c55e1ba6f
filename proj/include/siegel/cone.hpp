#ifndef SIEGEL_CONE_HPP
#define SIEGEL_CONE_HPP

// Homogeneous open convex cones without lines, restricted to finite products
// of half-lines and Lorentz cones, and the Lie algebras of their linear
// automorphism groups.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <siegel/elimination.hpp>
#include <siegel/error.hpp>
#include <siegel/matrix.hpp>
#include <siegel/scalar.hpp>

namespace siegel {

enum class AtomKind { half_line, lorentz };

struct ConeAtom {
  AtomKind kind = AtomKind::half_line;
  std::size_t dim = 1;

  friend bool operator==(const ConeAtom&, const ConeAtom&) = default;
};

/// A product of catalog atoms, stored flattened: an orthant is a run of
/// half-lines and nested products are spliced in place.
class ConeSpec {
 public:
  ConeSpec() = default;

  static ConeSpec half_line() { return ConeSpec({ConeAtom{AtomKind::half_line, 1}}); }

  static ConeSpec orthant(std::size_t k) {
    if (k == 0) throw input_error("orthant dimension must be positive");
    return ConeSpec(std::vector<ConeAtom>(k, ConeAtom{AtomKind::half_line, 1}));
  }

  /// {x : x1^2 - x2^2 - ... - xk^2 > 0, x1 > 0}, k >= 3.
  static ConeSpec lorentz(std::size_t k) {
    if (k < 3) throw input_error("Lorentz cone dimension must be at least 3");
    return ConeSpec({ConeAtom{AtomKind::lorentz, k}});
  }

  static ConeSpec product(std::span<const ConeSpec> factors) {
    std::vector<ConeAtom> atoms;
    for (const auto& f : factors) atoms.insert(atoms.end(), f.atoms_.begin(), f.atoms_.end());
    if (atoms.empty()) throw input_error("product of zero cones");
    return ConeSpec(std::move(atoms));
  }

  static ConeSpec product(std::initializer_list<ConeSpec> factors) {
    return product(std::span<const ConeSpec>(factors.begin(), factors.size()));
  }

  [[nodiscard]] const std::vector<ConeAtom>& atoms() const { return atoms_; }

  [[nodiscard]] std::size_t dim() const {
    std::size_t k = 0;
    for (const auto& a : atoms_) k += a.dim;
    return k;
  }

  /// First ambient coordinate of each atom.
  [[nodiscard]] std::vector<std::size_t> offsets() const {
    std::vector<std::size_t> off;
    std::size_t k = 0;
    for (const auto& a : atoms_) {
      off.push_back(k);
      k += a.dim;
    }
    return off;
  }

  [[nodiscard]] std::string describe() const {
    std::string out;
    std::size_t i = 0;
    while (i < atoms_.size()) {
      if (!out.empty()) out += " x ";
      if (atoms_[i].kind == AtomKind::lorentz) {
        out += "Lorentz(" + std::to_string(atoms_[i].dim) + ")";
        ++i;
        continue;
      }
      std::size_t run = 0;
      while (i < atoms_.size() && atoms_[i].kind == AtomKind::half_line) ++run, ++i;
      out += run == 1 ? "HalfLine" : "Orthant(" + std::to_string(run) + ")";
    }
    return out;
  }

  friend bool operator==(const ConeSpec&, const ConeSpec&) = default;

 private:
  explicit ConeSpec(std::vector<ConeAtom> atoms) : atoms_(std::move(atoms)) {}

  std::vector<ConeAtom> atoms_;
};

/// The catalog cones of dimensions 2, 3, 4 (index 1..6).
inline ConeSpec catalog_cone(int index) {
  switch (index) {
    case 1: return ConeSpec::orthant(2);
    case 2: return ConeSpec::orthant(3);
    case 3: return ConeSpec::lorentz(3);
    case 4: return ConeSpec::orthant(4);
    case 5: return ConeSpec::product({ConeSpec::lorentz(3), ConeSpec::half_line()});
    case 6: return ConeSpec::lorentz(4);
    default: throw input_error("catalog cone index must be 1..6");
  }
}

struct ConeAlgebraBasis {
  ConeSpec cone;
  std::vector<RealMatrix> basis;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

/// Basis of g(cone): E_ii for half-lines; for a Lorentz atom the identity,
/// the boosts E_1j + E_j1 and the rotations E_ij - E_ji (2 <= i < j); placed
/// block-diagonally for products.
inline ConeAlgebraBasis automorphism_algebra_basis(const ConeSpec& cone) {
  const std::size_t k = cone.dim();
  ConeAlgebraBasis out{cone, {}};
  const auto off = cone.offsets();
  for (std::size_t a = 0; a < cone.atoms().size(); ++a) {
    const auto& atom = cone.atoms()[a];
    const std::size_t o = off[a];
    if (atom.kind == AtomKind::half_line) {
      RealMatrix e(k, k);
      e(o, o) = 1;
      out.basis.push_back(std::move(e));
      continue;
    }
    RealMatrix id(k, k);
    for (std::size_t i = 0; i < atom.dim; ++i) id(o + i, o + i) = 1;
    out.basis.push_back(std::move(id));
    for (std::size_t j = 1; j < atom.dim; ++j) {
      RealMatrix boost(k, k);
      boost(o, o + j) = 1;
      boost(o + j, o) = 1;
      out.basis.push_back(std::move(boost));
    }
    for (std::size_t i = 1; i < atom.dim; ++i)
      for (std::size_t j = i + 1; j < atom.dim; ++j) {
        RealMatrix rot(k, k);
        rot(o + i, o + j) = 1;
        rot(o + j, o + i) = -1;
        out.basis.push_back(std::move(rot));
      }
  }
  return out;
}

/// k^2/2 - k/2 + 1: the largest possible dim g(cone) for a k-dimensional
/// open convex cone without lines.
inline Rational dimension_bound(std::size_t k) {
  if (k == 0) throw input_error("cone dimension must be positive");
  const Rational kk(static_cast<long>(k));
  Rational r = kk * kk / 2 - kk / 2 + 1;
  r.canonicalize();
  return r;
}

inline RealVector flatten(const RealMatrix& m) { return m.data(); }

/// Linear functionals on gl_k (as length k*k row-major vectors) whose common
/// zero set is exactly g(cone). A matrix A lies in g(cone) iff every returned
/// functional vanishes on A.
inline std::vector<RealVector> algebra_annihilator(const ConeSpec& cone) {
  const std::size_t k = cone.dim();
  const auto basis = automorphism_algebra_basis(cone).basis;
  RealMatrix rows(basis.size(), k * k);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < k * k; ++j) rows(i, j) = basis[i].data()[j];
  return kernel_basis(rows);
}

enum class Membership { interior, boundary, outside };

inline std::string to_string(Membership m) {
  switch (m) {
    case Membership::interior: return "interior";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside";
  }
  return "?";
}

/// Exact position of x relative to the cone; `boundary` means in the closure
/// but not the interior.
inline Membership contains(const ConeSpec& cone, std::span<const Rational> x) {
  if (x.size() != cone.dim())
    throw dimension_error("point has " + std::to_string(x.size()) + " coordinates, cone dimension is " +
                          std::to_string(cone.dim()));
  bool all_interior = true;
  const auto off = cone.offsets();
  for (std::size_t a = 0; a < cone.atoms().size(); ++a) {
    const auto& atom = cone.atoms()[a];
    const std::size_t o = off[a];
    if (atom.kind == AtomKind::half_line) {
      const int s = sgn(x[o]);
      if (s < 0) return Membership::outside;
      all_interior = all_interior && s > 0;
      continue;
    }
    Rational q = x[o] * x[o];
    for (std::size_t i = 1; i < atom.dim; ++i) q -= x[o + i] * x[o + i];
    const int sq = sgn(q);
    const int s1 = sgn(x[o]);
    if (sq < 0 || s1 < 0) return Membership::outside;
    all_interior = all_interior && sq > 0 && s1 > 0;
  }
  return all_interior ? Membership::interior : Membership::boundary;
}

/// Membership of c in the closed dual cone. Half-lines and Lorentz cones are
/// self-dual for the standard pairing, so this is closure membership.
inline bool in_closed_dual(const ConeSpec& cone, std::span<const Rational> c) {
  return contains(cone, c) != Membership::outside;
}

/// 1 on half-lines, (1, 0, ..., 0) on Lorentz atoms.
inline RealVector canonical_interior_point(const ConeSpec& cone) {
  RealVector x(cone.dim(), Rational(0));
  const auto off = cone.offsets();
  for (std::size_t o : off) x[o] = 1;
  return x;
}

/// Deterministic pseudorandom interior points. Only raw engine output is
/// used, so the sequence is identical on every standard library.
inline std::vector<RealVector> sample_interior_points(const ConeSpec& cone, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto small = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<RealVector> pts;
  const auto off = cone.offsets();
  for (std::size_t n = 0; n < count; ++n) {
    RealVector x(cone.dim());
    for (std::size_t a = 0; a < cone.atoms().size(); ++a) {
      const auto& atom = cone.atoms()[a];
      const std::size_t o = off[a];
      if (atom.kind == AtomKind::half_line) {
        x[o] = make_rational(small(1, 9), small(1, 4));
        continue;
      }
      Rational l1 = 0;
      for (std::size_t i = 1; i < atom.dim; ++i) {
        x[o + i] = make_rational(small(-6, 6), small(1, 3));
        l1 += abs(x[o + i]);
      }
      // The l1 norm dominates the Euclidean norm, so x1 > l1 is interior.
      x[o] = l1 + make_rational(small(1, 5), small(1, 3));
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

enum class TransitivityVerdict { transitive_certified, not_transitive };

inline std::string to_string(TransitivityVerdict v) {
  return v == TransitivityVerdict::transitive_certified ? "transitive-certified" : "not-transitive";
}

struct PointSpan {
  RealVector point;
  std::size_t image_rank = 0;
};

struct TransitivityResult {
  TransitivityVerdict verdict = TransitivityVerdict::not_transitive;
  std::vector<PointSpan> points;
  /// Full span was only checked at the listed points.
  bool sample_based = true;
};

/// Checks span{A x : A in h} = R^k at every supplied point. A deficient
/// point proves that the orbit through it is not open, hence the connected
/// group generated by h is not transitive. Full span at every sample point
/// certifies transitivity at those samples only.
inline TransitivityResult infinitesimal_transitivity(std::span<const RealMatrix> h, const ConeSpec& cone,
                                                     std::span<const RealVector> points) {
  const std::size_t k = cone.dim();
  if (points.empty()) throw input_error("transitivity check needs at least one base point");
  TransitivityResult out;
  bool all_full = true;
  for (const auto& x : points) {
    if (contains(cone, x) != Membership::interior)
      throw input_error("transitivity base point is not interior to the cone");
    RealMatrix images(h.size(), k);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i].rows() != k || h[i].cols() != k) throw dimension_error("algebra element has wrong size");
      const auto y = h[i] * x;
      for (std::size_t j = 0; j < k; ++j) images(i, j) = y[j];
    }
    const std::size_t r = h.empty() ? 0 : rank(images);
    all_full = all_full && r == k;
    out.points.push_back({x, r});
  }
  out.verdict = all_full ? TransitivityVerdict::transitive_certified : TransitivityVerdict::not_transitive;
  return out;
}

/// Canonical point followed by `samples` seeded pseudorandom interior points.
inline std::vector<RealVector> default_base_points(const ConeSpec& cone, std::size_t samples, std::uint64_t seed) {
  std::vector<RealVector> pts{canonical_interior_point(cone)};
  auto extra = sample_interior_points(cone, samples, seed);
  pts.insert(pts.end(), extra.begin(), extra.end());
  return pts;
}

}  // namespace siegel

#endif  // SIEGEL_CONE_HPP
