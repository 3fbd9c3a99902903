#pragma once

#include "ellbundle/bundles.hpp"

#include <cstdint>
#include <vector>

namespace ellbundle {

/// One point of a spectral fiber together with its ramification index.
struct FiberPoint {
  CurvePoint point;
  int index;
};

/// Fiber of the spectral cover T -> |n p0| over a divisor D: the distinct
/// points of D, each with index equal to its multiplicity.
class SpectralFiber {
 public:
  explicit SpectralFiber(LinearSystemDivisor base);

  const LinearSystemDivisor& base() const { return base_; }
  const std::vector<FiberPoint>& points() const { return points_; }
  int degree() const { return base_.degree(); }
  bool is_unramified() const;
  /// Largest ramification index; equals n exactly over D = n e.
  int max_index() const;

 private:
  LinearSystemDivisor base_;
  std::vector<FiberPoint> points_;
};

/// Throws DomainError("singular-support") if D meets the singular point and
/// DomainError("not-in-linear-system") unless D lies in |n p0|.
SpectralFiber fiber(const LinearSystemDivisor& d);

/// {n e : e in E[n]}, the divisors over which the cover has a single point
/// of index n. Requires a smooth curve whose n-torsion can be enumerated.
std::vector<LinearSystemDivisor> full_ramification_locus(const WeierstrassCurve& curve, int n);

/// Up to `samples` distinct divisors of |n p0| containing e. Over F_p the
/// free points are drawn uniformly; over Q from small rational points. The
/// last point is fixed by the group law. Deterministic for a given seed.
std::vector<LinearSystemDivisor> fiber_of_r(const WeierstrassCurve& curve, int n, const CurvePoint& e,
                                            int samples, std::uint64_t seed = 0);

/// Sampled family of fibers of C_A -> B over a parameter line with a
/// constant curve. A degree-r subcover would give r-point sub-multisets
/// whose group-law sum is constant along the line, so the cover is reported
/// reducible iff some 0 < r < n admits a common r-subset sum at every
/// sample. "true" is therefore exact for the sample; "false" is exact when
/// the family is split. Throws DomainError("rank") on mixed degrees or
/// curves.
bool cover_is_irreducible(const std::vector<LinearSystemDivisor>& family);

}  // namespace ellbundle
