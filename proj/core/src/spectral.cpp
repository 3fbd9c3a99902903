#include "ellbundle/spectral.hpp"

#include "ellbundle/error.hpp"

#include <algorithm>
#include <set>

namespace ellbundle {

SpectralFiber::SpectralFiber(LinearSystemDivisor base) : base_(std::move(base)) {
  if (base_.singular_mult() > 0) {
    throw DomainError("singular-support", "fibers over divisors at the singular point are not modeled");
  }
  if (!base_.in_linear_system()) {
    throw DomainError("not-in-linear-system", "divisor " + base_.to_string() + " is not in |n p0|");
  }
  for (const auto& [p, m] : base_.smooth_part()) points_.push_back({p, m});
}

bool SpectralFiber::is_unramified() const {
  return std::all_of(points_.begin(), points_.end(), [](const FiberPoint& fp) { return fp.index == 1; });
}

int SpectralFiber::max_index() const {
  int best = 0;
  for (const auto& fp : points_) best = std::max(best, fp.index);
  return best;
}

SpectralFiber fiber(const LinearSystemDivisor& d) { return SpectralFiber(d); }

std::vector<LinearSystemDivisor> full_ramification_locus(const WeierstrassCurve& curve, int n) {
  if (n < 1) throw DomainError("range", "n must be positive");
  if (curve.classify() != FiberType::Smooth) {
    throw DomainError("unsupported", "the ramification locus is computed on smooth curves");
  }
  std::vector<LinearSystemDivisor> out;
  for (const auto& e : curve.torsion_points(n)) {
    out.emplace_back(curve, std::map<CurvePoint, int>{{e, n}}, 0);
  }
  return out;
}

std::vector<LinearSystemDivisor> fiber_of_r(const WeierstrassCurve& curve, int n, const CurvePoint& e,
                                            int samples, std::uint64_t seed) {
  if (n < 2) throw DomainError("range", "fiber_of_r needs n >= 2");
  if (samples < 1) throw DomainError("range", "need at least one sample");
  const CurvePoint minus_e = curve.neg(e);  // validates e
  std::mt19937_64 rng(seed);

  std::vector<CurvePoint> pool;
  if (curve.field().is_rational()) {
    pool = curve.small_rational_points(12);
    pool.push_back(e);
    pool.push_back(minus_e);
  }
  auto draw = [&]() -> CurvePoint {
    if (curve.field().is_prime()) return curve.random_point(rng);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    return curve.scalar_mul(mult(rng), pool[pick(rng)]);
  };

  std::set<std::vector<CurvePoint>> seen;
  std::vector<LinearSystemDivisor> out;
  // Bounded number of attempts: small fields may have fewer divisors than
  // requested.
  for (int attempt = 0; attempt < 20 * samples && static_cast<int>(out.size()) < samples; ++attempt) {
    std::vector<CurvePoint> pts{e};
    for (int i = 0; i < n - 2; ++i) pts.push_back(draw());
    pts.push_back(curve.neg(curve.sum(pts)));
    std::sort(pts.begin(), pts.end());
    if (!seen.insert(pts).second) continue;
    out.push_back(LinearSystemDivisor::from_points(curve, pts));
  }
  return out;
}

namespace {

// All group-law sums of r-element sub-multisets of `pts`.
std::set<CurvePoint> subset_sums(const WeierstrassCurve& curve, const std::vector<CurvePoint>& pts, int r) {
  std::set<CurvePoint> sums;
  const int n = static_cast<int>(pts.size());
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + r, true);
  do {
    CurvePoint s = curve.identity();
    for (int i = 0; i < n; ++i) {
      if (mask[static_cast<std::size_t>(i)]) s = curve.add(s, pts[static_cast<std::size_t>(i)]);
    }
    sums.insert(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return sums;
}

}  // namespace

bool cover_is_irreducible(const std::vector<LinearSystemDivisor>& family) {
  if (family.empty()) throw DomainError("rank", "empty family");
  const int n = family.front().degree();
  for (const auto& d : family) {
    if (d.degree() != n) throw DomainError("rank", "family members have different degrees");
    if (!(d.curve() == family.front().curve())) throw DomainError("rank", "family members on different curves");
    if (d.singular_mult() > 0) throw DomainError("singular-support", "family meets the singular point");
  }
  const WeierstrassCurve& curve = family.front().curve();
  for (int r = 1; r < n; ++r) {
    std::set<CurvePoint> common = subset_sums(curve, family.front().points(), r);
    for (std::size_t i = 1; i < family.size() && !common.empty(); ++i) {
      const std::set<CurvePoint> here = subset_sums(curve, family[i].points(), r);
      std::set<CurvePoint> next;
      std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                            std::inserter(next, next.begin()));
      common = std::move(next);
    }
    if (!common.empty()) return false;
  }
  return true;
}

}  // namespace ellbundle
