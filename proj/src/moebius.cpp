#include "zns/moebius.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "zns/error.hpp"

namespace zns {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_entry(const Mobius& f) {
  return std::max({std::abs(f.a()), std::abs(f.b()), std::abs(f.c()), std::abs(f.d())});
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NumericallyAmbiguous: return "NumericallyAmbiguous";
    case ErrorKind::IdentityInput: return "IdentityInput";
    case ErrorKind::CoincidentFixedPoints: return "CoincidentFixedPoints";
    case ErrorKind::OverlappingDiscs: return "OverlappingDiscs";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::InvalidKindForParity: return "InvalidKindForParity";
    case ErrorKind::OrderNotDividing: return "OrderNotDividing";
    case ErrorKind::InadmissibleSignature: return "InadmissibleSignature";
    case ErrorKind::PlacementFailure: return "PlacementFailure";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::ParabolicSuspect: return "ParabolicSuspect";
    case ErrorKind::GcdConditionFailed: return "GcdConditionFailed";
    case ErrorKind::ConditionOneFailed: return "ConditionOneFailed";
    case ErrorKind::ConditionTwoFailed: return "ConditionTwoFailed";
    case ErrorKind::HalfTurnConditionFailed: return "HalfTurnConditionFailed";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

double chordal_distance(const ComplexPoint& p, const ComplexPoint& q) {
  if (p.is_infinite() && q.is_infinite()) return 0.0;
  if (p.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(q.value()));
  if (q.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(p.value()));
  const cplx z = p.value(), w = q.value();
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

// ---------------------------------------------------------------------------
// Mobius

Mobius::Mobius(cplx a, cplx b, cplx c, cplx d, Orientation orientation)
    : a_(a), b_(b), c_(c), d_(d), orientation_(orientation) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  const cplx det = a * d - b * c;
  if (!(scale > 0.0) || std::abs(det) <= 1e-14 * scale * scale || !std::isfinite(scale)) {
    throw Error(ErrorKind::DegenerateMatrix, "ad - bc vanishes");
  }
  const cplx s = std::sqrt(det);
  a_ /= s;
  b_ /= s;
  c_ /= s;
  d_ /= s;
}

Mobius::Mobius(cplx a, cplx b, cplx c, cplx d, Orientation orientation, Product)
    : a_(a), b_(b), c_(c), d_(d), orientation_(orientation) {
  const cplx det = a * d - b * c;
  const double rounding = 1e-15 * (std::abs(a * d) + std::abs(b * c));
  if (!std::isfinite(rounding)) throw Error(ErrorKind::DegenerateMatrix, "product overflowed");
  // when cancellation swamps ad − bc the factors' unit determinants are the better value
  if (rounding > 1e-9) return;
  const cplx s = std::sqrt(det);
  a_ /= s;
  b_ /= s;
  c_ /= s;
  d_ /= s;
}

Mobius Mobius::conjugation() { return {1.0, 0.0, 0.0, 1.0, Orientation::reversing}; }

ComplexPoint Mobius::operator()(const ComplexPoint& z) const {
  ComplexPoint w = z;
  if (reversing() && z.is_finite()) w = ComplexPoint(std::conj(z.value()));
  if (w.is_infinite()) {
    if (c_ == cplx{0.0, 0.0}) return ComplexPoint::infinity();
    return ComplexPoint(a_ / c_);
  }
  const cplx den = c_ * w.value() + d_;
  if (den == cplx{0.0, 0.0}) return ComplexPoint::infinity();
  return ComplexPoint((a_ * w.value() + b_) / den);
}

Mobius Mobius::inverse() const {
  if (!reversing()) return {d_, -b_, -c_, a_};
  return {std::conj(d_), -std::conj(b_), -std::conj(c_), std::conj(a_), Orientation::reversing};
}

Mobius Mobius::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Mobius result;
  Mobius base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Mobius compose(const Mobius& f, const Mobius& g) {
  cplx ga = g.a(), gb = g.b(), gc = g.c(), gd = g.d();
  if (f.reversing()) {
    ga = std::conj(ga);
    gb = std::conj(gb);
    gc = std::conj(gc);
    gd = std::conj(gd);
  }
  const Orientation o =
      f.reversing() != g.reversing() ? Orientation::reversing : Orientation::preserving;
  return {f.a() * ga + f.b() * gc, f.a() * gb + f.b() * gd, f.c() * ga + f.d() * gc,
          f.c() * gb + f.d() * gd, o, Mobius::Product{}};
}

double matrix_distance(const Mobius& f, const Mobius& g) {
  if (f.orientation() != g.orientation()) return kInf;
  auto dist = [&](double sign) {
    return std::max({std::abs(f.a() - sign * g.a()), std::abs(f.b() - sign * g.b()),
                     std::abs(f.c() - sign * g.c()), std::abs(f.d() - sign * g.d())});
  };
  return std::min(dist(1.0), dist(-1.0));
}

bool approx_equal(const Mobius& f, const Mobius& g, double tol) {
  return matrix_distance(f, g) < tol;
}

double Mobius::norm() const {
  return std::sqrt(std::norm(a_) + std::norm(b_) + std::norm(c_) + std::norm(d_));
}

bool power_is_identity(const Mobius& f, int k, double tol) {
  const double n = f.norm();
  return matrix_distance(f.pow(k), Mobius()) <= tol * k * n * n;
}

bool is_identity(const Mobius& f, double tol) { return approx_equal(f, Mobius::identity(), tol); }

Mobius cross_ratio_map(const ComplexPoint& z1, const ComplexPoint& z2, const ComplexPoint& z3) {
  if (z1.is_infinite()) {
    const cplx b = z2.value(), c = z3.value();
    return {0.0, b - c, 1.0, -c};
  }
  if (z2.is_infinite()) {
    const cplx a = z1.value(), c = z3.value();
    return {1.0, -a, 1.0, -c};
  }
  if (z3.is_infinite()) {
    const cplx a = z1.value(), b = z2.value();
    return {1.0, -a, 0.0, b - a};
  }
  const cplx a = z1.value(), b = z2.value(), c = z3.value();
  return {b - c, -a * (b - c), b - a, -c * (b - a)};
}

Mobius three_point_map(const ComplexPoint& z1, const ComplexPoint& z2, const ComplexPoint& z3,
                       const ComplexPoint& w1, const ComplexPoint& w2, const ComplexPoint& w3) {
  return cross_ratio_map(w1, w2, w3).inverse() * cross_ratio_map(z1, z2, z3);
}

Mobius affine(cplx scale, cplx shift) { return {scale, shift, 0.0, 1.0}; }

// ---------------------------------------------------------------------------
// Classification

const char* to_string(MapKind kind) {
  switch (kind) {
    case MapKind::identity: return "identity";
    case MapKind::elliptic: return "elliptic";
    case MapKind::parabolic: return "parabolic";
    case MapKind::loxodromic: return "loxodromic";
    case MapKind::reflection: return "reflection";
    case MapKind::imaginary_reflection: return "imaginary_reflection";
    case MapKind::pseudo_elliptic: return "pseudo_elliptic";
    case MapKind::glide_reflection: return "glide_reflection";
    case MapKind::pseudo_parabolic: return "pseudo_parabolic";
  }
  return "unknown";
}

double rotation_angle(double trace_squared) {
  return std::acos(std::clamp(trace_squared / 2.0 - 1.0, -1.0, 1.0));
}

namespace {

std::optional<int> snap_order(double theta, const ClassifyOptions& options) {
  for (int k = 2; k <= 2 * options.n_max; ++k) {
    for (int s = 1; 2 * s <= k; ++s) {
      if (std::gcd(s, k) != 1) continue;
      if (std::abs(theta - 2.0 * std::numbers::pi * s / k) < options.angle_snap) return k;
    }
  }
  return std::nullopt;
}

MapClass classify_conformal(const Mobius& f, const ClassifyOptions& options) {
  const cplx t2 = f.trace_squared();
  const double delta = std::abs(t2 - 4.0);
  MapClass out;
  if (delta <= 1e-12) {
    out.kind = is_identity(f) ? MapKind::identity : MapKind::parabolic;
    return out;
  }
  if (delta <= options.parabolic_eps) {
    throw Error(ErrorKind::NumericallyAmbiguous, "trace^2 within eps of 4");
  }
  const double imag_tol = 1e-9 * std::max(1.0, std::abs(t2));
  if (std::abs(t2.imag()) <= imag_tol && t2.real() > -imag_tol && t2.real() < 4.0) {
    const double theta = rotation_angle(t2.real());
    out.kind = MapKind::elliptic;
    out.order = snap_order(theta, options);
    out.multiplier = std::polar(1.0, theta);
    return out;
  }
  const cplx tr = f.trace();
  const cplx lambda = (tr + std::sqrt(t2 - 4.0)) / 2.0;
  cplx k = lambda * lambda;
  if (std::abs(k) < 1.0) k = 1.0 / k;
  out.kind = MapKind::loxodromic;
  out.multiplier = k;
  return out;
}

}  // namespace

MapClass classify(const Mobius& f, const ClassifyOptions& options) {
  if (!f.reversing()) return classify_conformal(f, options);
  const Mobius square = f * f;
  const MapClass sq = classify_conformal(square, options);
  MapClass out;
  out.multiplier = sq.multiplier;
  switch (sq.kind) {
    case MapKind::identity:
      // f∘f has matrix M·conj(M) = ±I; the sign separates the two involutions.
      out.kind = square.trace().real() > 0.0 ? MapKind::reflection : MapKind::imaginary_reflection;
      out.order = 2;
      break;
    case MapKind::elliptic:
      out.kind = MapKind::pseudo_elliptic;
      if (sq.order) out.order = 2 * *sq.order;
      break;
    case MapKind::loxodromic: out.kind = MapKind::glide_reflection; break;
    default: out.kind = MapKind::pseudo_parabolic; break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Circle

Circle::Circle(double A, cplx B, double C) {
  const double m = std::max({std::abs(A), std::abs(B), std::abs(C)});
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorKind::DegenerateMatrix, "empty circle");
  A_ = A / m;
  B_ = B / m;
  C_ = C / m;
  if (std::norm(B_) - A_ * C_ <= 0.0) {
    throw Error(ErrorKind::DegenerateMatrix, "circle has no real points");
  }
}

Circle Circle::round(cplx center, double radius) {
  return {1.0, -center, std::norm(center) - radius * radius};
}

Circle Circle::exterior(cplx center, double radius) { return round(center, radius).flipped(); }

Circle Circle::half_plane(cplx p, cplx dir) {
  dir /= std::abs(dir);
  return {0.0, cplx{0.0, 0.5} * dir, (std::conj(p) * dir).imag()};
}

double Circle::form(cplx z) const {
  return A_ * std::norm(z) + 2.0 * (std::conj(B_) * z).real() + C_;
}

bool Circle::is_line() const { return std::abs(A_) < 1e-14; }

cplx Circle::center() const { return -B_ / A_; }

double Circle::radius() const { return std::sqrt(std::norm(B_) - A_ * C_) / std::abs(A_); }

double Circle::signed_distance(const ComplexPoint& z) const {
  if (z.is_infinite()) {
    if (is_line()) return 0.0;
    return A_ > 0.0 ? kInf : -kInf;
  }
  if (is_line()) return form(z.value()) / (2.0 * std::abs(B_));
  const double d = std::abs(z.value() - center()) - radius();
  return A_ > 0.0 ? d : -d;
}

std::vector<ComplexPoint> Circle::samples(int count) const {
  std::vector<ComplexPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  if (is_line()) {
    const cplx p0 = -C_ * B_ / (2.0 * std::norm(B_));
    const cplx dir = cplx{0.0, 1.0} * B_ / std::abs(B_);
    for (int j = 0; j < count; ++j) {
      const double t = std::tan(std::numbers::pi * (j + 0.5) / count - std::numbers::pi / 2.0);
      out.emplace_back(p0 + dir * t);
    }
    return out;
  }
  const cplx c = center();
  const double r = radius();
  for (int j = 0; j < count; ++j) {
    out.emplace_back(c + std::polar(r, 2.0 * std::numbers::pi * j / count));
  }
  return out;
}

double circle_distance(const Circle& x, const Circle& y) {
  auto dist = [&](double s) {
    return std::max({std::abs(x.A() - s * y.A()), std::abs(x.B() - s * y.B()),
                     std::abs(x.C() - s * y.C())});
  };
  return std::min(dist(1.0), dist(-1.0));
}

Circle image_circle(const Mobius& f, const Circle& c) {
  // H' = N^H · H · N with N the inverse matrix; reversing maps see conj(H).
  using Mat = std::array<std::array<cplx, 2>, 2>;
  const cplx B = f.reversing() ? std::conj(c.B()) : c.B();
  const Mat H{{{c.A(), B}, {std::conj(B), c.C()}}};
  const Mat N{{{f.d(), -f.b()}, {-f.c(), f.a()}}};
  Mat HN{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) HN[i][j] = H[i][0] * N[0][j] + H[i][1] * N[1][j];
  Mat out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = std::conj(N[0][i]) * HN[0][j] + std::conj(N[1][i]) * HN[1][j];
  return {out[0][0].real(), out[0][1], out[1][1].real()};
}

// ---------------------------------------------------------------------------
// Region

Region::Region(RegionKind kind, std::vector<Circle> parts, bool is_union, ComplexPoint witness)
    : kind_(kind), parts_(std::move(parts)), union_(is_union), witness_(witness) {}

Region Region::disc(const Circle& boundary) {
  ComplexPoint witness;
  if (boundary.is_line()) {
    const cplx B = boundary.B();
    const cplx p0 = -boundary.C() * B / (2.0 * std::norm(B));
    witness = ComplexPoint(p0 - B / std::abs(B));
  } else if (boundary.A() > 0.0) {
    witness = ComplexPoint(boundary.center());
  } else {
    witness = ComplexPoint::infinity();
  }
  return disc(boundary, witness);
}

Region Region::disc(const Circle& boundary, const ComplexPoint& witness) {
  return Region(RegionKind::disc, {boundary}, true, witness);
}

Region Region::lens(const Circle& first, const Circle& second, bool fat,
                    const ComplexPoint& witness) {
  return Region(RegionKind::lens, {first, second}, fat, witness);
}

double Region::signed_distance(const ComplexPoint& z) const {
  double out = union_ ? kInf : -kInf;
  for (const Circle& c : parts_) {
    const double d = c.signed_distance(z);
    out = union_ ? std::min(out, d) : std::max(out, d);
  }
  return out;
}

Region Region::transformed(const Mobius& f) const {
  std::vector<Circle> parts;
  parts.reserve(parts_.size());
  for (const Circle& c : parts_) parts.push_back(image_circle(f, c));
  return Region(kind_, std::move(parts), union_, f(witness_));
}

std::vector<ComplexPoint> Region::boundary_samples(int per_arc) const {
  std::vector<ComplexPoint> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (const ComplexPoint& p : parts_[i].samples(per_arc)) {
      bool on_boundary = true;
      for (std::size_t j = 0; j < parts_.size() && on_boundary; ++j) {
        if (j == i) continue;
        const double d = parts_[j].signed_distance(p);
        on_boundary = union_ ? d >= -1e-12 : d <= 1e-12;
      }
      if (on_boundary) out.push_back(p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixed points

namespace {

std::vector<ComplexPoint> conformal_fixed_points(const Mobius& f) {
  const cplx a = f.a(), b = f.b(), c = f.c(), d = f.d();
  const double scale = max_entry(f);
  std::vector<ComplexPoint> out;
  if (std::abs(c) <= 1e-14 * scale) {
    if (std::abs(d - a) > 1e-14 * scale) out.emplace_back(b / (d - a));
    out.push_back(ComplexPoint::infinity());
    return out;
  }
  const cplx disc = f.trace_squared() - 4.0;
  if (std::abs(disc) <= 1e-14 * scale * scale) {
    out.emplace_back((a - d) / (2.0 * c));
    return out;
  }
  const cplx sq = std::sqrt(disc);
  const cplx q = std::abs(a - d + sq) >= std::abs(a - d - sq) ? a - d + sq : a - d - sq;
  out.emplace_back(q / (2.0 * c));
  out.emplace_back(-2.0 * b / q);
  return out;
}

Circle reflection_circle(const Mobius& f) {
  const cplx a = f.a(), b = f.b(), c = f.c(), d = f.d();
  cplx phase;
  if (std::abs(c) >= std::abs(b) && std::abs(c) >= std::abs(a)) {
    phase = c / std::abs(c);
  } else if (std::abs(b) >= std::abs(a)) {
    phase = b / std::abs(b);
  } else {
    phase = std::sqrt(-a / std::conj(d));
  }
  const cplx inv = std::conj(phase);
  return {(c * inv).real(), -a * inv, (-b * inv).real()};
}

}  // namespace

FixedSet fixed_points(const Mobius& f) {
  FixedSet out;
  if (!f.reversing()) {
    if (is_identity(f)) throw Error(ErrorKind::IdentityInput, "identity fixes every point");
    out.points = conformal_fixed_points(f);
    return out;
  }
  const Mobius square = f * f;
  if (is_identity(square)) {
    if (square.trace().real() > 0.0) out.circle = reflection_circle(f);
    return out;
  }
  for (const ComplexPoint& p : conformal_fixed_points(square)) {
    if (chordal_distance(f(p), p) < 1e-9) out.points.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructors

Mobius make_elliptic(const ComplexPoint& p, const ComplexPoint& q, int k) {
  if (chordal_distance(p, q) < 1e-12) {
    throw Error(ErrorKind::CoincidentFixedPoints, "elliptic needs two distinct fixed points");
  }
  const std::array<cplx, 6> candidates{cplx{0, 0}, cplx{1, 0}, cplx{-1, 0},
                                       cplx{0, 1}, cplx{0, -1}, cplx{2, 3}};
  ComplexPoint third;
  for (cplx z : candidates) {
    if (chordal_distance(z, p) > 1e-3 && chordal_distance(z, q) > 1e-3) {
      third = z;
      break;
    }
  }
  const Mobius h = cross_ratio_map(p, third, q);
  const cplx half = std::polar(1.0, std::numbers::pi / k);
  const Mobius rotation(half, 0.0, 0.0, std::conj(half));
  return h.inverse() * rotation * h;
}

Mobius disc_to_unit(const Circle& c) {
  if (!c.is_line()) {
    const cplx center = c.center();
    const double r = c.radius();
    if (c.A() > 0.0) return affine(1.0 / r, -center / r);
    return {0.0, r, 1.0, -center};
  }
  const auto pts = c.samples(3);
  Mobius h = three_point_map(pts[0], pts[1], pts[2], cplx{1, 0}, cplx{0, 1}, cplx{-1, 0});
  const ComplexPoint w = h(Region::disc(c).witness());
  if (w.is_infinite() || std::abs(w.value()) > 1.0) h = Mobius(0.0, 1.0, 1.0, 0.0) * h;
  return h;
}

bool discs_disjoint(const Circle& c1, const Circle& c2, double tol) {
  // Inversive distance of the two boundary circles; |δ| > 1 iff they do not meet.
  const double s1 = std::sqrt(std::norm(c1.B()) - c1.A() * c1.C());
  const double s2 = std::sqrt(std::norm(c2.B()) - c2.A() * c2.C());
  const double delta =
      (c1.A() * c2.C() + c2.A() * c1.C() - 2.0 * (c1.B() * std::conj(c2.B())).real()) /
      (2.0 * s1 * s2);
  if (std::abs(delta) <= 1.0 + tol) return false;
  return c1.signed_distance(c2.samples(1)[0]) > 0.0 && c2.signed_distance(c1.samples(1)[0]) > 0.0;
}

Mobius make_loxodromic_pairing(const Circle& c1, const Circle& c2) {
  if (!discs_disjoint(c1, c2)) {
    throw Error(ErrorKind::OverlappingDiscs, "pairing needs disjoint closed discs");
  }
  const Mobius inversion(0.0, 1.0, 1.0, 0.0);
  return disc_to_unit(c2).inverse() * inversion * disc_to_unit(c1);
}

}  // namespace zns
