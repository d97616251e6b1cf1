#pragma once

// Möbius and extended Möbius transformations of the Riemann sphere, their
// classification, and their action on generalized circles and discs.

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace zns {

using cplx = std::complex<double>;

/// A point of the Riemann sphere: a finite complex number or the point at infinity.
class ComplexPoint {
 public:
  ComplexPoint() : value_(cplx{0.0, 0.0}) {}
  ComplexPoint(cplx z) : value_(z) {}  // NOLINT(google-explicit-constructor)
  ComplexPoint(double re, double im) : value_(cplx{re, im}) {}

  static ComplexPoint infinity() {
    ComplexPoint p;
    p.value_.reset();
    return p;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  cplx value() const { return *value_; }

 private:
  std::optional<cplx> value_;
};

/// Chordal distance on the sphere; handles infinity without magnitude cutoffs.
double chordal_distance(const ComplexPoint& p, const ComplexPoint& q);

enum class Orientation { preserving, reversing };

/// z ↦ (a z + b)/(c z + d), or (a z̄ + b)/(c z̄ + d) when reversing.
/// The matrix is kept normalized to determinant 1.
class Mobius {
 public:
  Mobius() = default;
  Mobius(cplx a, cplx b, cplx c, cplx d, Orientation orientation = Orientation::preserving);

  static Mobius identity() { return {}; }
  /// z ↦ z̄
  static Mobius conjugation();

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }
  Orientation orientation() const { return orientation_; }
  bool reversing() const { return orientation_ == Orientation::reversing; }

  cplx det() const { return a_ * d_ - b_ * c_; }
  cplx trace() const { return a_ + d_; }
  cplx trace_squared() const { return trace() * trace(); }
  /// Frobenius norm of the normalized matrix.
  double norm() const;

  ComplexPoint operator()(const ComplexPoint& z) const;
  Mobius inverse() const;
  Mobius pow(int k) const;

 private:
  // Products of normalized matrices: only rescaled, since det is 1 up to rounding even
  // when the entries are large.
  struct Product {};
  Mobius(cplx a, cplx b, cplx c, cplx d, Orientation orientation, Product);
  friend Mobius compose(const Mobius& f, const Mobius& g);

  cplx a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
  Orientation orientation_ = Orientation::preserving;
};

/// (f∘g)(z) = f(g(z)).
Mobius compose(const Mobius& f, const Mobius& g);
inline Mobius operator*(const Mobius& f, const Mobius& g) { return compose(f, g); }

/// Matrix distance up to the ±1 ambiguity; infinite when orientations differ.
double matrix_distance(const Mobius& f, const Mobius& g);
bool approx_equal(const Mobius& f, const Mobius& g, double tol = 1e-9);
bool is_identity(const Mobius& f, double tol = 1e-9);
/// f^k = id, with the tolerance scaled by k·|f|² to absorb the rounding of an
/// ill-conditioned matrix.
bool power_is_identity(const Mobius& f, int k, double tol = 1e-12);

/// The unique map sending z1, z2, z3 to 0, 1, ∞.
Mobius cross_ratio_map(const ComplexPoint& z1, const ComplexPoint& z2, const ComplexPoint& z3);
/// The unique map sending each z_i to w_i.
Mobius three_point_map(const ComplexPoint& z1, const ComplexPoint& z2, const ComplexPoint& z3,
                       const ComplexPoint& w1, const ComplexPoint& w2, const ComplexPoint& w3);
Mobius affine(cplx scale, cplx shift);

// ---------------------------------------------------------------------------
// Classification

enum class MapKind {
  identity,
  elliptic,
  parabolic,
  loxodromic,
  reflection,
  imaginary_reflection,
  pseudo_elliptic,
  glide_reflection,
  pseudo_parabolic,
};

const char* to_string(MapKind kind);

struct MapClass {
  MapKind kind = MapKind::identity;
  /// Finite order for elliptic / pseudo-elliptic (and 2 for reflections); empty when
  /// the rotation angle is not a rational multiple of 2π within tolerance.
  std::optional<int> order;
  /// Loxodromic: multiplier with modulus > 1. Elliptic: rotation e^{iθ}, 0 < θ ≤ π.
  /// Extended classes: the multiplier of the square.
  cplx multiplier{1.0, 0.0};

  friend bool operator==(const MapClass& x, const MapClass& y) {
    return x.kind == y.kind && x.order == y.order;
  }
};

struct ClassifyOptions {
  int n_max = 64;
  double parabolic_eps = 1e-9;
  double angle_snap = 1e-7;
};

MapClass classify(const Mobius& f, const ClassifyOptions& options = {});

/// Rotation angle θ ∈ [0, π] recovered from a real trace² in [0, 4].
double rotation_angle(double trace_squared);

// ---------------------------------------------------------------------------
// Generalized circles and regions

/// A|z|² + conj(B) z + B conj(z) + C = 0, scaled so the largest coefficient has
/// modulus 1. The closed side {form ≤ 0} is the disc the circle bounds.
class Circle {
 public:
  Circle(double A, cplx B, double C);

  /// Disc |z - center| ≤ radius.
  static Circle round(cplx center, double radius);
  /// Closed exterior |z - center| ≥ radius (contains ∞).
  static Circle exterior(cplx center, double radius);
  /// Closed half-plane to the right of the line through p with direction dir.
  static Circle half_plane(cplx p, cplx dir);

  double A() const { return A_; }
  cplx B() const { return B_; }
  double C() const { return C_; }

  double form(cplx z) const;
  bool is_line() const;
  /// Round circles only.
  cplx center() const;
  double radius() const;
  /// The same circle bounding the complementary disc.
  Circle flipped() const { return {-A_, -B_, -C_}; }

  /// Euclidean signed distance to the disc (negative inside); ±∞ at ∞.
  double signed_distance(const ComplexPoint& z) const;
  /// `count` boundary points; for lines, spaced by a tangent law.
  std::vector<ComplexPoint> samples(int count) const;

 private:
  double A_;
  cplx B_;
  double C_;
};

/// Max coefficient distance, modulo the overall sign (both sides name one circle).
double circle_distance(const Circle& x, const Circle& y);

/// Image of a generalized circle; the bounded side is carried along.
Circle image_circle(const Mobius& f, const Circle& c);

enum class RegionKind { disc, lens };

/// A closed disc, or a lens bounded by two circular arcs through two common points
/// (the union of two discs when the interior angle exceeds π, their intersection
/// otherwise).
class Region {
 public:
  static Region disc(const Circle& boundary);
  static Region disc(const Circle& boundary, const ComplexPoint& witness);
  static Region lens(const Circle& first, const Circle& second, bool fat,
                     const ComplexPoint& witness);

  RegionKind kind() const { return kind_; }
  std::span<const Circle> parts() const { return parts_; }
  bool is_union() const { return union_; }
  const ComplexPoint& witness() const { return witness_; }

  /// Conservative signed distance: a positive value is a lower bound for the
  /// distance to the region, a negative value bounds the depth inside it.
  double signed_distance(const ComplexPoint& z) const;
  bool contains(const ComplexPoint& z, double margin = 0.0) const {
    return signed_distance(z) < -margin;
  }
  Region transformed(const Mobius& f) const;
  /// Boundary samples of every bounding circle, restricted to the region boundary.
  std::vector<ComplexPoint> boundary_samples(int per_arc) const;

 private:
  Region(RegionKind kind, std::vector<Circle> parts, bool is_union, ComplexPoint witness);

  RegionKind kind_;
  std::vector<Circle> parts_;
  bool union_;
  ComplexPoint witness_;
};

// ---------------------------------------------------------------------------
// Fixed points and constructors

struct FixedSet {
  std::vector<ComplexPoint> points;
  std::optional<Circle> circle;
};

FixedSet fixed_points(const Mobius& f);

/// Elliptic map fixing p and q with rotation 2π/k about p.
Mobius make_elliptic(const ComplexPoint& p, const ComplexPoint& q, int k);

/// Loxodromic map taking the closed complement of the disc bounded by c1 onto the
/// interior of the disc bounded by c2, with c1 carried onto c2.
Mobius make_loxodromic_pairing(const Circle& c1, const Circle& c2);

/// Some map taking the disc bounded by c onto the closed unit disc.
Mobius disc_to_unit(const Circle& c);

/// True when the two closed generalized discs are disjoint with positive gap.
bool discs_disjoint(const Circle& c1, const Circle& c2, double tol = 1e-12);

}  // namespace zns
