#include "ellbundle/chern_formulas.hpp"

#include "ellbundle/error.hpp"

namespace ellbundle {

namespace {

void require_n(int n) {
  if (n < 2) throw DomainError("range", "n must be at least 2");
}

void require_d(int n, int d) {
  require_n(n);
  if (d < 1 || d > n - 1) {
    throw DomainError("range", "d must satisfy 1 <= d <= n-1, got d=" + std::to_string(d));
  }
}

GradedClass one(const RingPtr& r) { return GradedClass::constant(r, 1); }
GradedClass num(const RingPtr& r, const Rational& q) { return GradedClass::constant(r, q); }
GradedClass gen(const RingPtr& r, const char* name) { return GradedClass::generator(r, name); }

}  // namespace

// ---------------------------------------------------------------------------
// Single curve

GradedClass c_U0_single_curve(int n, int truncation) { return c_Ua_single_curve(n, 0, truncation); }

GradedClass ch_U0_single_curve(int n, int truncation) {
  require_n(n);
  const RingPtr r = RingSpec::single_curve(n, truncation);
  const GradedClass h = gen(r, "h");
  const GradedClass t = gen(r, "t");
  return num(r, n) * exp(-h) + (one(r) - t) * (one(r) - exp(-h));
}

GradedClass c_Ua_single_curve(int n, int a, int truncation) {
  require_n(n);
  const RingPtr r = RingSpec::single_curve(n, truncation);
  const GradedClass h = gen(r, "h");
  const GradedClass t = gen(r, "t");
  return (one(r) - h + t * h) * pow(one(r) - h, a + n - 2);
}

GradedClass ch_Ua_twist_single_curve(int n, int a, int b, int truncation) {
  require_n(n);
  const RingPtr r = RingSpec::single_curve(n, truncation);
  const GradedClass h = gen(r, "h");
  const GradedClass t = gen(r, "t");
  const GradedClass eb = exp(Rational(b) * h);
  const GradedClass eb1 = exp(Rational(b - 1) * h);
  return num(r, n) * eb1 + (num(r, 1 - a) - t) * (eb - eb1);
}

GradedClass ch_U_poincare(int n, int truncation) {
  require_n(n);
  const RingPtr r = RingSpec::single_curve(n, truncation);
  const GradedClass h = gen(r, "h");
  const GradedClass t = gen(r, "t");
  return num(r, n) + t * (one(r) - exp(h));
}

GradedClass c_U_poincare(int n, int truncation) {
  require_n(n);
  const RingPtr r = RingSpec::single_curve(n, truncation);
  const GradedClass h = gen(r, "h");
  const GradedClass t = gen(r, "t");
  GradedClass c = one(r);
  for (int k = 2; k <= truncation; ++k) c += Rational(k % 2 == 0 ? 1 : -1) * pow(h, k - 1) * t;
  return c;
}

GradedClass c_Ud_single_curve(int n, int d, int truncation) {
  require_d(n, d);
  const RingPtr r = RingSpec::single_curve(n, truncation);
  const GradedClass h = gen(r, "h");
  const GradedClass t = gen(r, "t");
  return (one(r) + h + t * h) * pow(one(r) + h, d - 1);
}

GradedClass ch_Ud_single_curve(int n, int d, int truncation) {
  require_d(n, d);
  const RingPtr r = RingSpec::single_curve(n, truncation);
  const GradedClass h = gen(r, "h");
  const GradedClass t = gen(r, "t");
  return (num(r, d) - t) * exp(h) + num(r, n - d) + t;
}

// ---------------------------------------------------------------------------
// Fibration: Chern characters

GradedClass ch_Ud_fibration(const RingPtr& ring, int n, int d) {
  require_d(n, d);
  const GradedClass sigma = gen(ring, "sigma");
  const GradedClass zeta = gen(ring, "zeta");
  const GradedClass L = gen(ring, "L");
  GradedClass first = exp(-sigma);
  for (int i = 1; i <= d - 1; ++i) first += exp(Rational(-i) * L);
  GradedClass second = exp(sigma);
  for (int i = 1; i <= n - d - 1; ++i) second += exp(Rational(i) * L);
  return first * exp(zeta - L) + second;
}

GradedClass ch_Ua_formula(const RingPtr& ring, int n, int a, const GradedClass& zeta) {
  if (n < 1) throw DomainError("range", "n must be positive");
  const GradedClass sigma = gen(ring, "sigma");
  const GradedClass L = gen(ring, "L");
  const GradedClass e_minus_zeta = exp(-zeta);
  return e_minus_zeta * series_ratio(a + n, L) - series_ratio(a, L) + exp(-sigma) * (one(ring) - e_minus_zeta);
}

GradedClass ch_Ua_fibration(const RingPtr& ring, int n, int a) {
  return ch_Ua_formula(ring, n, a, gen(ring, "zeta"));
}

GradedClass hyperplane_class(const RingPtr& ring, int n) {
  return gen(ring, "zeta") - Rational(n) * gen(ring, "L");
}

GradedClass modification_increment(const RingPtr& ring, int n, int a) {
  const GradedClass L = gen(ring, "L");
  return -(exp(Rational(a - 1) * L) * (one(ring) - exp(-hyperplane_class(ring, n))));
}

// ---------------------------------------------------------------------------
// Fibration: total Chern classes

GradedClass range_product(const RingPtr& ring, int lo, int hi, const std::function<GradedClass(int)>& f,
                          bool signed_range) {
  GradedClass acc = one(ring);
  if (hi >= lo) {
    for (int s = lo; s <= hi; ++s) acc *= f(s);
    return acc;
  }
  if (!signed_range || hi == lo - 1) return acc;
  for (int s = hi + 1; s <= lo - 1; ++s) acc *= f(s);
  return inverse(acc);
}

GradedClass c_Ud_fibration(const RingPtr& ring, int n, int d) {
  require_d(n, d);
  const GradedClass sigma = gen(ring, "sigma");
  const GradedClass zeta = gen(ring, "zeta");
  const GradedClass L = gen(ring, "L");
  const GradedClass lead = one(ring) + zeta - L + zeta * sigma;
  const auto f = [&](int r) { return one(ring) - Rational(r + 1) * L + zeta; };
  const auto g = [&](int s) { return one(ring) + Rational(s) * L; };
  return lead * range_product(ring, 1, d - 1, f) * range_product(ring, 1, n - d - 1, g);
}

GradedClass c_Ua_fibration_branch(const RingPtr& ring, int n, int a, int branch, bool signed_range) {
  require_n(n);
  const GradedClass sigma = gen(ring, "sigma");
  const GradedClass zeta = gen(ring, "zeta");
  const GradedClass L = gen(ring, "L");
  const GradedClass lead = one(ring) - zeta + L + zeta * sigma;
  const auto up = [&](int s) { return one(ring) + Rational(s + 1) * L - zeta; };
  const auto down = [&](int r) { return one(ring) - Rational(r) * L; };
  switch (branch) {
    case 0: {
      const auto inv = [&](int r) { return inverse(one(ring) + Rational(r) * L); };
      return lead * range_product(ring, 1, n + a - 2, up, signed_range) *
             range_product(ring, 1, a - 1, inv, signed_range);
    }
    case 1:
      return lead * range_product(ring, 1, n + a - 2, up, signed_range) *
             range_product(ring, 1, -a, down, signed_range);
    case 2: {
      const auto inv = [&](int s) { return inverse(one(ring) - Rational(s - 1) * L - zeta); };
      return lead * range_product(ring, 0, 1 - n - a, inv, signed_range) *
             range_product(ring, 1, -a, down, signed_range);
    }
    default:
      throw DomainError("range", "branch must be 0, 1 or 2");
  }
}

int c_Ua_branch_for(int n, int a) {
  if (a >= 0) return 0;
  if (a >= -(n - 1)) return 1;
  return 2;
}

GradedClass c_Ua_fibration(const RingPtr& ring, int n, int a) {
  return c_Ua_fibration_branch(ring, n, a, c_Ua_branch_for(n, a));
}

GradedClass c1_Ua_displayed(const RingPtr& ring, int n, int a) {
  const Rational l_coeff = Rational(a * n) + Rational(n * n - n, 2);
  return l_coeff * gen(ring, "L") - Rational(n + a - 1) * gen(ring, "zeta");
}

GradedClass c2_Ua_displayed(const RingPtr& ring, int n, int a) {
  const GradedClass sigma = gen(ring, "sigma");
  const GradedClass zeta = gen(ring, "zeta");
  const GradedClass L = gen(ring, "L");
  const Rational m = Rational(a * n) + Rational(n * n - n, 2);
  const Rational zz = Rational((a + n - 1) * (a + n - 2), 2);
  const Rational zl = -Rational((n * n + 2 * a * n - 2 * n - a) * (a + n - 1), 2);
  const Rational ll = m * m / 2 - P(Rational(a + n)) + P(Rational(a));
  return zz * (zeta * zeta) + zl * (zeta * L) + ll * (L * L) + sigma * zeta;
}

GradedClass ch_Vn(const RingPtr& ring, int n) {
  require_n(n);
  const GradedClass L = gen(ring, "L");
  GradedClass acc = one(ring);
  for (int i = 2; i <= n; ++i) acc += exp(Rational(-i) * L);
  return acc;
}

GradedClass ch_Wn_on_sigma(const RingPtr& ring, int n) {
  require_n(n);
  const GradedClass L = gen(ring, "L");
  GradedClass acc = exp(-L);
  for (int i = 1; i <= n - 1; ++i) acc += exp(Rational(i) * L);
  return acc;
}

GradedClass ch_Wn(const RingPtr& ring, int n) {
  require_n(n);
  const GradedClass L = gen(ring, "L");
  GradedClass acc = exp(gen(ring, "sigma"));
  for (int i = 1; i <= n - 1; ++i) acc += exp(Rational(i) * L);
  return acc;
}

GradedClass specialize_to_single_curve(const GradedClass& x, int n) {
  const RingPtr target = RingSpec::single_curve(n, x.ring()->truncation());
  std::vector<GradedClass> images;
  for (const auto& name : x.ring()->generators()) {
    if (name == "sigma") {
      images.push_back(GradedClass::generator(target, "t"));
    } else if (name == "zeta") {
      images.push_back(GradedClass::generator(target, "h"));
    } else if (name == "L") {
      images.push_back(GradedClass(target));
    } else {
      throw DomainError("ring-mismatch", "specialization expects generators sigma, zeta, L");
    }
  }
  return substitute(x, target, images);
}

// ---------------------------------------------------------------------------
// Identifiers

std::string to_string(BundleFamily family) {
  switch (family) {
    case BundleFamily::UaSingleCurve: return "ua-curve";
    case BundleFamily::UdSingleCurve: return "ud-curve";
    case BundleFamily::UPoincare: return "u-poincare";
    case BundleFamily::UaFibration: return "ua-fibration";
    case BundleFamily::UdFibration: return "ud-fibration";
  }
  return "?";
}

void validate(const UniversalBundleId& id) {
  require_n(id.n);
  if (id.family == BundleFamily::UdSingleCurve || id.family == BundleFamily::UdFibration) require_d(id.n, id.param);
}

RingPtr ring_for(const UniversalBundleId& id, int truncation) {
  validate(id);
  switch (id.family) {
    case BundleFamily::UaFibration:
    case BundleFamily::UdFibration:
      return RingSpec::fibration(truncation);
    default:
      return RingSpec::single_curve(id.n, truncation);
  }
}

ChernData chern_data(const UniversalBundleId& id, int truncation) {
  validate(id);
  switch (id.family) {
    case BundleFamily::UaSingleCurve:
      return ChernData::from_character(ch_Ua_twist_single_curve(id.n, id.param, id.twist, truncation));
    case BundleFamily::UdSingleCurve:
      return ChernData::from_character(ch_Ud_single_curve(id.n, id.param, truncation));
    case BundleFamily::UPoincare:
      return ChernData::from_character(ch_U_poincare(id.n, truncation));
    case BundleFamily::UaFibration:
      return ChernData::from_character(ch_Ua_fibration(ring_for(id, truncation), id.n, id.param));
    case BundleFamily::UdFibration:
      return ChernData::from_character(ch_Ud_fibration(ring_for(id, truncation), id.n, id.param));
  }
  throw DomainError("range", "unknown family");
}

}  // namespace ellbundle
