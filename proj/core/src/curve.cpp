#include "ellbundle/curve.hpp"

#include "ellbundle/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ellbundle {

std::string to_string(FiberType type) {
  switch (type) {
    case FiberType::Smooth:
      return "Smooth";
    case FiberType::Nodal:
      return "Nodal";
    case FiberType::Cuspidal:
      return "Cuspidal";
  }
  return "?";
}

FieldElem discriminant(const FieldElem& g2, const FieldElem& g3) {
  require_same_field(g2, g3);
  return g2 * g2 * g2 - (g3 * g3).times(27);
}

// ---------------------------------------------------------------------------
// CurvePoint

CurvePoint CurvePoint::identity(const Field& field) {
  return CurvePoint(field, FieldElem::from_int(0, field), FieldElem::from_int(1, field), true, false);
}

const FieldElem& CurvePoint::x() const {
  if (identity_) throw DomainError("identity", "the identity has no affine x-coordinate");
  return x_;
}

const FieldElem& CurvePoint::y() const {
  if (identity_) throw DomainError("identity", "the identity has no affine y-coordinate");
  return y_;
}

FieldElem CurvePoint::X() const { return identity_ ? FieldElem::from_int(0, field_) : x_; }
FieldElem CurvePoint::Y() const { return identity_ ? FieldElem::from_int(1, field_) : y_; }
FieldElem CurvePoint::Z() const { return FieldElem::from_int(identity_ ? 0 : 1, field_); }

std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
  if (a.identity_ || b.identity_) {
    if (a.identity_ && b.identity_) return std::strong_ordering::equal;
    return a.identity_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.x_ <=> b.x_; c != 0) return c;
  return a.y_ <=> b.y_;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) { return (a <=> b) == 0; }

std::string CurvePoint::to_string() const {
  if (identity_) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// WeierstrassCurve

WeierstrassCurve::WeierstrassCurve(FieldElem g2, FieldElem g3)
    : g2_(std::move(g2)), g3_(std::move(g3)), field_(g2_.field()),
      discriminant_(ellbundle::discriminant(g2_, g3_)) {}

WeierstrassCurve WeierstrassCurve::over(const Field& field, const Rational& g2, const Rational& g3) {
  return WeierstrassCurve(FieldElem::from_rational(g2, field), FieldElem::from_rational(g3, field));
}

FiberType WeierstrassCurve::classify() const {
  if (!discriminant_.is_zero()) return FiberType::Smooth;
  if (g2_.is_zero() && g3_.is_zero()) return FiberType::Cuspidal;
  return FiberType::Nodal;
}

std::optional<CurvePoint> WeierstrassCurve::singular_point() const {
  switch (classify()) {
    case FiberType::Smooth:
      return std::nullopt;
    case FiberType::Cuspidal: {
      const FieldElem zero = FieldElem::from_int(0, field_);
      return CurvePoint(field_, zero, zero, false, true);
    }
    case FiberType::Nodal: {
      const FieldElem x0 = -(g3_.times(3)) / g2_.times(2);
      return CurvePoint(field_, x0, FieldElem::from_int(0, field_), false, true);
    }
  }
  return std::nullopt;
}

std::optional<bool> WeierstrassCurve::node_is_split() const {
  if (classify() != FiberType::Nodal) return std::nullopt;
  // Near the node y^2 ~ 12 x0 (x - x0)^2.
  const FieldElem x0 = singular_point()->x();
  return x0.times(12).is_square();
}

FieldElem WeierstrassCurve::cubic(const FieldElem& x) const {
  return (x * x * x).times(4) - g2_ * x - g3_;
}

bool WeierstrassCurve::contains(const FieldElem& x, const FieldElem& y) const {
  return y * y == cubic(x);
}

CurvePoint WeierstrassCurve::point(const FieldElem& x, const FieldElem& y) const {
  require_same_field(x, g2_);
  require_same_field(y, g2_);
  if (!contains(x, y)) {
    throw DomainError("off-curve", "point (" + x.to_string() + ", " + y.to_string() +
                                       ") is not on the curve");
  }
  bool singular = false;
  if (auto s = singular_point()) singular = (s->x_ == x && s->y_ == y);
  return CurvePoint(field_, x, y, false, singular);
}

CurvePoint WeierstrassCurve::point(const Rational& x, const Rational& y) const {
  return point(FieldElem::from_rational(x, field_), FieldElem::from_rational(y, field_));
}

void WeierstrassCurve::require_on_smooth_locus(const CurvePoint& p) const {
  if (!(p.field() == field_)) {
    throw DomainError("cross-field", "point over " + p.field().name() + " on a curve over " +
                                         field_.name());
  }
  if (p.is_identity()) return;
  if (!contains(p.x_, p.y_)) throw DomainError("off-curve", p.to_string() + " is not on the curve");
  if (auto s = singular_point(); s && s->x_ == p.x_ && s->y_ == p.y_) {
    throw DomainError("singular-point", "the group law is defined on the smooth locus only");
  }
}

CurvePoint WeierstrassCurve::neg(const CurvePoint& p) const {
  require_on_smooth_locus(p);
  if (p.is_identity()) return p;
  return CurvePoint(field_, p.x_, -p.y_, false, false);
}

CurvePoint WeierstrassCurve::add(const CurvePoint& p, const CurvePoint& q) const {
  require_on_smooth_locus(p);
  require_on_smooth_locus(q);
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;

  FieldElem slope;
  if (p.x_ == q.x_) {
    if ((p.y_ + q.y_).is_zero()) return identity();
    // Tangent: 2y y' = 12 x^2 - g2.
    slope = ((p.x_ * p.x_).times(12) - g2_) / p.y_.times(2);
  } else {
    slope = (q.y_ - p.y_) / (q.x_ - p.x_);
  }
  // Substituting y = slope x + c into the cubic: roots sum to slope^2 / 4.
  const FieldElem four = FieldElem::from_int(4, field_);
  const FieldElem x3 = slope * slope / four - p.x_ - q.x_;
  const FieldElem y3 = -(slope * (x3 - p.x_) + p.y_);
  return CurvePoint(field_, x3, y3, false, false);
}

CurvePoint WeierstrassCurve::scalar_mul(std::int64_t k, const CurvePoint& p) const {
  require_on_smooth_locus(p);
  CurvePoint base = k < 0 ? neg(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  CurvePoint result = identity();
  while (e > 0) {
    if (e & 1) result = add(result, base);
    base = add(base, base);
    e >>= 1;
  }
  return result;
}

CurvePoint WeierstrassCurve::sum(const std::vector<CurvePoint>& points) const {
  CurvePoint total = identity();
  for (const auto& p : points) total = add(total, p);
  return total;
}

bool WeierstrassCurve::in_linear_system(const std::vector<CurvePoint>& points, int n) const {
  if (static_cast<int>(points.size()) != n) {
    throw DomainError("cardinality", "divisor has " + std::to_string(points.size()) +
                                         " points, expected " + std::to_string(n));
  }
  return sum(points).is_identity();
}

std::vector<CurvePoint> WeierstrassCurve::smooth_points() const {
  if (!field_.is_prime()) throw DomainError("unsupported", "point enumeration needs a prime field");
  const std::int64_t p = field_.modulus();
  std::vector<CurvePoint> out{identity()};
  const auto s = singular_point();
  for (std::int64_t xi = 0; xi < p; ++xi) {
    const FieldElem x = FieldElem::residue(xi, p);
    const FieldElem rhs = cubic(x);
    for (std::int64_t yi = 0; yi < p; ++yi) {
      const FieldElem y = FieldElem::residue(yi, p);
      if (!(y * y == rhs)) continue;
      if (s && s->x_ == x && s->y_ == y) continue;
      out.push_back(CurvePoint(field_, x, y, false, false));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t WeierstrassCurve::smooth_locus_order() const {
  return static_cast<std::int64_t>(smooth_points().size());
}

CurvePoint WeierstrassCurve::random_point(std::mt19937_64& rng) const {
  if (!field_.is_prime()) throw DomainError("unsupported", "random points need a prime field");
  const std::int64_t p = field_.modulus();
  const auto s = singular_point();
  std::uniform_int_distribution<std::int64_t> coord(0, p);
  // x == p encodes the identity so that it is drawn with its fair weight
  // under rejection sampling over (x, sign).
  while (true) {
    const std::int64_t xi = coord(rng);
    const bool flip = (rng() & 1U) != 0;
    if (xi == p) {
      if (flip) return identity();
      continue;
    }
    const FieldElem x = FieldElem::residue(xi, p);
    FieldElem y;
    if (!cubic(x).sqrt(&y)) continue;
    if (s && s->x_ == x && s->y_ == y) continue;
    if (y.is_zero()) {
      if (flip) return CurvePoint(field_, x, y, false, false);
      continue;
    }
    return CurvePoint(field_, x, flip ? -y : y, false, false);
  }
}

namespace {

using Poly = std::vector<Rational>;  // coefficients, index = degree

std::vector<std::int64_t> divisors_of(std::int64_t v) {
  v = v < 0 ? -v : v;
  if (v > 1'000'000'000'000LL) {
    throw DomainError("unsupported", "coefficients too large for rational root search");
  }
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      ds.push_back(d);
      if (d != v / d) ds.push_back(v / d);
    }
  }
  return ds;
}

Rational eval(const Poly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::set<Rational> rational_roots(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  std::set<Rational> roots;
  if (f.empty()) return roots;
  // Factor out powers of x.
  std::size_t shift = 0;
  while (shift < f.size() && f[shift] == 0) ++shift;
  if (shift > 0) {
    roots.insert(Rational(0));
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (f.size() <= 1) return roots;
  BigInt lcm = 1;
  for (const auto& c : f) {
    const BigInt d = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> ints;
  for (const auto& c : f) ints.push_back(boost::multiprecision::numerator(Rational(c * lcm)));
  const auto ps = divisors_of(ints.front().convert_to<std::int64_t>());
  const auto qs = divisors_of(ints.back().convert_to<std::int64_t>());
  for (auto p : ps) {
    for (auto q : qs) {
      for (int sign : {1, -1}) {
        const Rational x(sign * p, q);
        if (eval(f, x) == 0) roots.insert(x);
      }
    }
  }
  return roots;
}

}  // namespace

std::vector<CurvePoint> WeierstrassCurve::torsion_points(int n) const {
  if (n < 1) throw DomainError("range", "torsion order must be positive");
  std::vector<CurvePoint> out;
  if (field_.is_prime()) {
    for (const auto& p : smooth_points()) {
      if (scalar_mul(n, p).is_identity()) out.push_back(p);
    }
    return out;
  }
  if (n > 4) {
    throw DomainError("unsupported", "torsion over Q is only solved directly for n <= 4");
  }
  // Y^2 = x^3 + A x + B with Y = y/2.
  const Rational A = -g2_.as_rational() / 4;
  const Rational B = -g3_.as_rational() / 4;
  std::set<Rational> xs;
  const Poly psi2 = {-g3_.as_rational(), -g2_.as_rational(), 0, 4};
  const Poly psi3 = {-A * A, 12 * B, 6 * A, 0, 3};
  const Poly psi4 = {-2 * A * A * A - 16 * B * B, -8 * A * B, -10 * A * A, 40 * B, 10 * A, 0, 2};
  if (n % 2 == 0) xs.merge(rational_roots(psi2));
  if (n == 3) xs.merge(rational_roots(psi3));
  if (n == 4) xs.merge(rational_roots(psi4));
  out.push_back(identity());
  const auto s = singular_point();
  for (const auto& xq : xs) {
    const FieldElem x(xq);
    FieldElem y;
    if (!cubic(x).sqrt(&y)) continue;
    for (const FieldElem& yy : {y, -y}) {
      if (s && s->x_ == x && s->y_ == yy) continue;
      CurvePoint p(field_, x, yy, false, false);
      if (scalar_mul(n, p).is_identity()) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CurvePoint> WeierstrassCurve::small_rational_points(int bound) const {
  if (!field_.is_rational()) throw DomainError("unsupported", "rational point search needs Q");
  std::vector<CurvePoint> out{identity()};
  const auto s = singular_point();
  for (int v = 1; v <= bound; ++v) {
    for (int u = -bound; u <= bound; ++u) {
      if (std::gcd(u, v) != 1) continue;
      const FieldElem x(Rational(u, v));
      FieldElem y;
      if (!cubic(x).sqrt(&y)) continue;
      for (const FieldElem& yy : {y, -y}) {
        if (s && s->x_ == x && s->y_ == yy) continue;
        out.push_back(CurvePoint(field_, x, yy, false, false));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ellbundle
