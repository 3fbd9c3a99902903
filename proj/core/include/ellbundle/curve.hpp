#pragma once

#include "ellbundle/field.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ellbundle {

enum class FiberType { Smooth, Nodal, Cuspidal };

std::string to_string(FiberType type);

/// g2^3 - 27 g3^2. Throws DomainError on cross-field input.
FieldElem discriminant(const FieldElem& g2, const FieldElem& g3);

/// A point of a Weierstrass cubic in normalized projective coordinates:
/// either the identity [0:1:0] or an affine point [x:y:1].
class CurvePoint {
 public:
  static CurvePoint identity(const Field& field);

  bool is_identity() const { return identity_; }
  /// Set by WeierstrassCurve::point when the point is the node or cusp.
  bool is_singular() const { return singular_; }

  const FieldElem& x() const;  // throws for the identity
  const FieldElem& y() const;

  FieldElem X() const;
  FieldElem Y() const;
  FieldElem Z() const;
  const Field& field() const { return field_; }

  /// Identity sorts first, then affine points by (x, y).
  friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b);
  friend bool operator==(const CurvePoint& a, const CurvePoint& b);

  /// "O" for the identity, "(x, y)" otherwise.
  std::string to_string() const;

 private:
  friend class WeierstrassCurve;
  CurvePoint(Field field, FieldElem x, FieldElem y, bool identity, bool singular)
      : field_(field), x_(std::move(x)), y_(std::move(y)), identity_(identity), singular_(singular) {}

  Field field_;
  FieldElem x_;
  FieldElem y_;
  bool identity_;
  bool singular_;
};

/// Plane cubic Y^2 Z = 4 X^3 - g2 X Z^2 - g3 Z^3 with marked point [0:1:0]
/// over Q or F_p (p > 3). Immutable.
class WeierstrassCurve {
 public:
  /// Throws DomainError if g2 and g3 live over different fields.
  WeierstrassCurve(FieldElem g2, FieldElem g3);
  static WeierstrassCurve over(const Field& field, const Rational& g2, const Rational& g3);

  const FieldElem& g2() const { return g2_; }
  const FieldElem& g3() const { return g3_; }
  const Field& field() const { return field_; }
  const FieldElem& discriminant() const { return discriminant_; }

  /// Smooth iff the discriminant is nonzero; Cuspidal iff g2 = g3 = 0.
  FiberType classify() const;

  /// Node or cusp, absent on smooth curves. For a node the point is
  /// (-3 g3 / (2 g2), 0), the double root of 4x^3 - g2 x - g3.
  std::optional<CurvePoint> singular_point() const;

  /// For nodal curves: whether the two tangent directions at the node are
  /// defined over the base field (split multiplicative reduction).
  std::optional<bool> node_is_split() const;

  /// 4x^3 - g2 x - g3.
  FieldElem cubic(const FieldElem& x) const;

  bool contains(const FieldElem& x, const FieldElem& y) const;

  /// Validated affine point; throws DomainError("off-curve") otherwise.
  CurvePoint point(const FieldElem& x, const FieldElem& y) const;
  CurvePoint point(const Rational& x, const Rational& y) const;
  CurvePoint identity() const { return CurvePoint::identity(field_); }

  /// Chord-tangent group law on the smooth locus with identity p0.
  /// Throws DomainError("singular-point") if an argument is the singular
  /// point and DomainError("off-curve") if it is not on this curve.
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint neg(const CurvePoint& p) const;
  CurvePoint scalar_mul(std::int64_t k, const CurvePoint& p) const;
  /// Group-law sum of a list of smooth points.
  CurvePoint sum(const std::vector<CurvePoint>& points) const;

  /// All smooth points P with n P = p0. Over F_p by enumeration; over Q
  /// only for n <= 4, via rational roots of division polynomials. Throws
  /// DomainError("unsupported") otherwise.
  std::vector<CurvePoint> torsion_points(int n) const;

  /// True iff the group-law sum of `points` is p0. The multiset must have
  /// exactly n elements (DomainError("cardinality") otherwise).
  bool in_linear_system(const std::vector<CurvePoint>& points, int n) const;

  /// All smooth points including p0, sorted. Prime fields only.
  std::vector<CurvePoint> smooth_points() const;
  /// Order of the group of smooth points (enumeration, prime fields only).
  std::int64_t smooth_locus_order() const;

  /// Uniformly random smooth point (prime fields only).
  CurvePoint random_point(std::mt19937_64& rng) const;

  /// Affine rational points with x = u/v, |u| <= bound, 1 <= v <= bound,
  /// plus p0 (rational curves only; used for sampling).
  std::vector<CurvePoint> small_rational_points(int bound) const;

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.field_ == b.field_ && a.g2_ == b.g2_ && a.g3_ == b.g3_;
  }

 private:
  void require_on_smooth_locus(const CurvePoint& p) const;

  FieldElem g2_;
  FieldElem g3_;
  Field field_;
  FieldElem discriminant_;
};

}  // namespace ellbundle
