#include "ellbundle/bundles.hpp"

#include "ellbundle/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ellbundle {

// ---------------------------------------------------------------------------
// DegreeZeroSheaf

DegreeZeroSheaf DegreeZeroSheaf::line_bundle(const CurvePoint& e) {
  if (e.is_singular()) {
    throw DomainError("singular-point", "O(e - p0) needs a smooth point e");
  }
  return DegreeZeroSheaf(e);
}

DegreeZeroSheaf DegreeZeroSheaf::torsion_free() { return DegreeZeroSheaf(std::nullopt); }

const CurvePoint& DegreeZeroSheaf::point() const {
  if (!point_) throw DomainError("torsion-free", "F has no associated smooth point");
  return *point_;
}

std::strong_ordering operator<=>(const DegreeZeroSheaf& a, const DegreeZeroSheaf& b) {
  if (!a.point_ || !b.point_) {
    if (!a.point_ && !b.point_) return std::strong_ordering::equal;
    return a.point_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return *a.point_ <=> *b.point_;
}

bool operator==(const DegreeZeroSheaf& a, const DegreeZeroSheaf& b) { return (a <=> b) == 0; }

std::string DegreeZeroSheaf::to_string() const {
  if (!point_) return "F";
  return "O(" + point_->to_string() + " - p0)";
}

// ---------------------------------------------------------------------------
// AtiyahBundle

namespace {

std::string partition_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace

AtiyahBundle::AtiyahBundle(WeierstrassCurve curve,
                           std::vector<std::pair<DegreeZeroSheaf, Partition>> components)
    : curve_(std::move(curve)) {
  for (auto& [sheaf, parts] : components) {
    if (parts.empty()) throw DomainError("partition", "empty partition");
    for (int r : parts) {
      if (r <= 0) throw DomainError("partition", "partition parts must be positive");
    }
    if (sheaf.is_torsion_free()) {
      if (curve_.classify() == FiberType::Smooth) {
        throw DomainError("torsion-free", "F exists only on singular curves");
      }
    } else {
      const CurvePoint& e = sheaf.point();
      if (!(e.field() == curve_.field())) throw DomainError("cross-field", "point over another field");
      if (!e.is_identity()) {
        // Re-validate against this curve (also recomputes the singular flag).
        const CurvePoint checked = curve_.point(e.x(), e.y());
        if (checked.is_singular()) {
          throw DomainError("singular-point", "line bundle at the singular point");
        }
      }
    }
    auto& slot = components_[sheaf];
    slot.insert(slot.end(), parts.begin(), parts.end());
  }
  for (auto& [sheaf, parts] : components_) std::sort(parts.begin(), parts.end(), std::greater<>());
}

AtiyahBundle AtiyahBundle::indecomposable(const WeierstrassCurve& curve, const DegreeZeroSheaf& lambda, int r) {
  return AtiyahBundle(curve, {{lambda, Partition{r}}});
}

int AtiyahBundle::rank() const {
  int n = 0;
  for (const auto& [sheaf, parts] : components_) n += std::accumulate(parts.begin(), parts.end(), 0);
  return n;
}

bool AtiyahBundle::has_torsion_free_component() const {
  return components_.count(DegreeZeroSheaf::torsion_free()) > 0;
}

AtiyahBundle AtiyahBundle::direct_sum(const AtiyahBundle& other) const {
  if (!(curve_ == other.curve_)) throw DomainError("curve-mismatch", "bundles on different curves");
  std::vector<std::pair<DegreeZeroSheaf, Partition>> all(components_.begin(), components_.end());
  all.insert(all.end(), other.components_.begin(), other.components_.end());
  return AtiyahBundle(curve_, std::move(all));
}

std::string AtiyahBundle::to_string() const {
  std::string s;
  for (const auto& [sheaf, parts] : components_) {
    if (!s.empty()) s += " + ";
    s += sheaf.to_string() + partition_string(parts);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// LinearSystemDivisor

LinearSystemDivisor::LinearSystemDivisor(WeierstrassCurve curve, std::map<CurvePoint, int> smooth_part,
                                         int singular_mult)
    : curve_(std::move(curve)), singular_mult_(singular_mult), degree_(singular_mult) {
  if (singular_mult < 0) throw DomainError("multiplicity", "negative singular multiplicity");
  if (singular_mult > 0 && curve_.classify() == FiberType::Smooth) {
    throw DomainError("singular-support", "smooth curve has no singular point");
  }
  for (const auto& [p, m] : smooth_part) {
    if (m < 0) throw DomainError("multiplicity", "negative multiplicity");
    if (m == 0) continue;
    if (!p.is_identity()) {
      const CurvePoint checked = curve_.point(p.x(), p.y());
      if (checked.is_singular()) {
        throw DomainError("singular-support", "use singular_mult for the singular point");
      }
    }
    smooth_[p] += m;
    degree_ += m;
  }
}

LinearSystemDivisor LinearSystemDivisor::from_points(const WeierstrassCurve& curve,
                                                     const std::vector<CurvePoint>& points) {
  std::map<CurvePoint, int> mult;
  for (const auto& p : points) ++mult[p];
  return LinearSystemDivisor(curve, std::move(mult), 0);
}

std::vector<CurvePoint> LinearSystemDivisor::points() const {
  std::vector<CurvePoint> out;
  for (const auto& [p, m] : smooth_) out.insert(out.end(), static_cast<std::size_t>(m), p);
  return out;
}

CurvePoint LinearSystemDivisor::class_point() const {
  CurvePoint total = curve_.identity();
  for (const auto& [p, m] : smooth_) total = curve_.add(total, curve_.scalar_mul(m, p));
  return total;
}

bool LinearSystemDivisor::in_linear_system() const {
  return singular_mult_ == 0 && class_point().is_identity();
}

LinearSystemDivisor LinearSystemDivisor::operator+(const LinearSystemDivisor& other) const {
  if (!(curve_ == other.curve_)) throw DomainError("curve-mismatch", "divisors on different curves");
  std::map<CurvePoint, int> merged = smooth_;
  for (const auto& [p, m] : other.smooth_) merged[p] += m;
  return LinearSystemDivisor(curve_, std::move(merged), singular_mult_ + other.singular_mult_);
}

std::string LinearSystemDivisor::to_string() const {
  std::string s;
  for (const auto& [p, m] : smooth_) {
    if (!s.empty()) s += " + ";
    s += (m == 1 ? "" : std::to_string(m) + "*") + p.to_string();
  }
  if (singular_mult_ > 0) {
    if (!s.empty()) s += " + ";
    s += (singular_mult_ == 1 ? "" : std::to_string(singular_mult_) + "*") + "sing";
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Operations

LinearSystemDivisor zeta(const AtiyahBundle& v) {
  std::map<CurvePoint, int> smooth;
  int singular = 0;
  for (const auto& [sheaf, parts] : v.components()) {
    const int d = std::accumulate(parts.begin(), parts.end(), 0);
    if (sheaf.is_torsion_free()) {
      singular += d;
    } else {
      smooth[sheaf.point()] += d;
    }
  }
  return LinearSystemDivisor(v.curve(), std::move(smooth), singular);
}

namespace {

void reject_torsion_free(const AtiyahBundle& v, const char* what) {
  if (v.has_torsion_free_component()) {
    throw DomainError("torsion-free", std::string(what) + " is not modeled for components at F");
  }
}

}  // namespace

int dim_hom(const AtiyahBundle& v, const AtiyahBundle& w) {
  if (!(v.curve() == w.curve())) throw DomainError("curve-mismatch", "bundles on different curves");
  reject_torsion_free(v, "Hom");
  reject_torsion_free(w, "Hom");
  int total = 0;
  for (const auto& [sheaf, parts] : v.components()) {
    auto it = w.components().find(sheaf);
    if (it == w.components().end()) continue;
    for (int r : parts) {
      for (int s : it->second) total += std::min(r, s);
    }
  }
  return total;
}

bool is_regular(const AtiyahBundle& v) {
  reject_torsion_free(v, "regularity");
  return std::all_of(v.components().begin(), v.components().end(),
                     [](const auto& kv) { return kv.second.size() == 1; });
}

int h0_twist(const AtiyahBundle& v, const DegreeZeroSheaf& lambda) {
  if (lambda.is_torsion_free()) throw DomainError("torsion-free", "twist by F is not a line bundle");
  auto it = v.components().find(lambda);
  return it == v.components().end() ? 0 : static_cast<int>(it->second.size());
}

AtiyahBundle regular_representative(const LinearSystemDivisor& d) {
  if (d.singular_mult() > 0) {
    throw DomainError("singular-support", "regular representative at the singular point is not modeled");
  }
  std::vector<std::pair<DegreeZeroSheaf, Partition>> comps;
  for (const auto& [p, m] : d.smooth_part()) comps.emplace_back(DegreeZeroSheaf::line_bundle(p), Partition{m});
  return AtiyahBundle(d.curve(), std::move(comps));
}

AtiyahBundle dual(const AtiyahBundle& v) {
  std::vector<std::pair<DegreeZeroSheaf, Partition>> comps;
  for (const auto& [sheaf, parts] : v.components()) {
    if (sheaf.is_torsion_free()) {
      comps.emplace_back(sheaf, parts);
    } else {
      comps.emplace_back(DegreeZeroSheaf::line_bundle(v.curve().neg(sheaf.point())), parts);
    }
  }
  return AtiyahBundle(v.curve(), std::move(comps));
}

CurvePoint det_point(const AtiyahBundle& v) {
  reject_torsion_free(v, "determinant point");
  CurvePoint total = v.curve().identity();
  for (const auto& [sheaf, parts] : v.components()) {
    const int d = std::accumulate(parts.begin(), parts.end(), 0);
    total = v.curve().add(total, v.curve().scalar_mul(d, sheaf.point()));
  }
  return total;
}

Rational h0_bound(const std::vector<SlopePiece>& profile) {
  if (profile.empty()) throw DomainError("slopes", "empty Harder-Narasimhan profile");
  int rank = 0;
  std::optional<Rational> previous;
  for (const auto& piece : profile) {
    if (piece.rank <= 0) throw DomainError("slopes", "graded pieces need positive rank");
    const Rational mu(piece.degree, piece.rank);
    if (previous && !(mu < *previous)) {
      throw DomainError("slopes", "slopes of a Harder-Narasimhan profile must strictly decrease");
    }
    previous = mu;
    rank += piece.rank;
  }
  const Rational mu0(profile.front().degree, profile.front().rank);
  return (mu0 > 1 ? mu0 : Rational(1)) * rank;
}

bool h0_bound_check(const std::vector<SlopePiece>& profile, std::int64_t h0) {
  return Rational(h0) <= h0_bound(profile);
}

}  // namespace ellbundle
