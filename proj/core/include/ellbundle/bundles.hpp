#pragma once

#include "ellbundle/curve.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ellbundle {

/// A rank-one degree-zero sheaf on a Weierstrass cubic: either the line
/// bundle O(e - p0) for a smooth point e, or the non-locally-free torsion
/// free sheaf F at the singular point.
class DegreeZeroSheaf {
 public:
  static DegreeZeroSheaf line_bundle(const CurvePoint& e);
  static DegreeZeroSheaf torsion_free();

  bool is_torsion_free() const { return !point_.has_value(); }
  const CurvePoint& point() const;  // throws for F

  /// F sorts after every line bundle.
  friend std::strong_ordering operator<=>(const DegreeZeroSheaf& a, const DegreeZeroSheaf& b);
  friend bool operator==(const DegreeZeroSheaf& a, const DegreeZeroSheaf& b);

  std::string to_string() const;

 private:
  explicit DegreeZeroSheaf(std::optional<CurvePoint> p) : point_(std::move(p)) {}
  std::optional<CurvePoint> point_;
};

/// Multiset of positive integers, stored in descending order.
using Partition = std::vector<int>;

/// Semistable degree-zero bundle in Atiyah normal form:
/// V = sum over lambda of sum over parts r of I_r(lambda).
class AtiyahBundle {
 public:
  /// Validates: partitions nonempty with positive parts; line-bundle points
  /// smooth and on the curve; F only on singular curves. Partitions are
  /// sorted descending; components with equal sheaves are merged.
  AtiyahBundle(WeierstrassCurve curve, std::vector<std::pair<DegreeZeroSheaf, Partition>> components);

  /// I_r(lambda).
  static AtiyahBundle indecomposable(const WeierstrassCurve& curve, const DegreeZeroSheaf& lambda, int r);

  const WeierstrassCurve& curve() const { return curve_; }
  const std::map<DegreeZeroSheaf, Partition>& components() const { return components_; }
  int rank() const;
  bool has_torsion_free_component() const;

  /// Direct sum (same curve).
  AtiyahBundle direct_sum(const AtiyahBundle& other) const;

  friend bool operator==(const AtiyahBundle& a, const AtiyahBundle& b) {
    return a.curve_ == b.curve_ && a.components_ == b.components_;
  }

  std::string to_string() const;

 private:
  WeierstrassCurve curve_;
  std::map<DegreeZeroSheaf, Partition> components_;
};

/// Effective divisor of degree n on the curve: smooth points with
/// multiplicities plus a multiplicity at the singular point. `class_point`
/// is the point e with D in |(n-1)p0 + e|; it is p0 exactly when the
/// divisor lies in |n p0|.
class LinearSystemDivisor {
 public:
  LinearSystemDivisor(WeierstrassCurve curve, std::map<CurvePoint, int> smooth_part, int singular_mult);
  /// Divisor from an explicit list of smooth points.
  static LinearSystemDivisor from_points(const WeierstrassCurve& curve, const std::vector<CurvePoint>& points);

  const WeierstrassCurve& curve() const { return curve_; }
  int degree() const { return degree_; }
  const std::map<CurvePoint, int>& smooth_part() const { return smooth_; }
  int singular_mult() const { return singular_mult_; }
  /// Points listed with multiplicity, ascending.
  std::vector<CurvePoint> points() const;

  /// Group-law sum of the smooth part; meaningful when singular_mult = 0.
  CurvePoint class_point() const;
  /// True iff singular_mult = 0 and the smooth part sums to p0.
  bool in_linear_system() const;

  /// Multiset union.
  LinearSystemDivisor operator+(const LinearSystemDivisor& other) const;
  friend bool operator==(const LinearSystemDivisor& a, const LinearSystemDivisor& b) {
    return a.curve_ == b.curve_ && a.smooth_ == b.smooth_ && a.singular_mult_ == b.singular_mult_;
  }

  std::string to_string() const;

 private:
  WeierstrassCurve curve_;
  std::map<CurvePoint, int> smooth_;
  int singular_mult_;
  int degree_;
};

/// zeta(V): each component at O(e - p0) with partition of total d contributes
/// d e; the F component contributes to the singular multiplicity. When det V
/// is nontrivial the result lies in |(n-1)p0 + e|, reported by class_point().
LinearSystemDivisor zeta(const AtiyahBundle& v);

/// dim Hom(V, W) = sum over common line bundles of sum_{j,k} min(r_j, s_k).
/// Throws DomainError("torsion-free") if either side has an F component.
int dim_hom(const AtiyahBundle& v, const AtiyahBundle& w);

/// True iff each component is a single I_r(lambda); equivalently
/// dim Hom(V, V) = rank V. Throws for F components.
bool is_regular(const AtiyahBundle& v);

/// h^0(V tensor lambda^{-1}) = number of parts at lambda.
int h0_twist(const AtiyahBundle& v, const DegreeZeroSheaf& lambda);

/// The regular bundle with the given zeta: I_d(O(e - p0)) for each point e
/// of multiplicity d. Throws DomainError("singular-support") when the
/// divisor meets the singular point.
AtiyahBundle regular_representative(const LinearSystemDivisor& d);

/// Negates each point (I_r(lambda)^dual = I_r(lambda^{-1})); F is self-dual.
AtiyahBundle dual(const AtiyahBundle& v);

/// Group-law sum of r_i e_i over the line-bundle components. Throws for F.
CurvePoint det_point(const AtiyahBundle& v);

/// Graded piece of a Harder-Narasimhan filtration.
struct SlopePiece {
  int rank;
  std::int64_t degree;
};

/// max(mu_0, 1) * rank for a HN profile with strictly decreasing slopes;
/// throws DomainError("slopes") otherwise.
Rational h0_bound(const std::vector<SlopePiece>& profile);

/// True iff h0 <= h0_bound(profile).
bool h0_bound_check(const std::vector<SlopePiece>& profile, std::int64_t h0);

}  // namespace ellbundle
