#include "ellbundle/cohomology.hpp"

#include "ellbundle/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

namespace ellbundle {

int weight(const Monomial& m) {
  int w = 0;
  for (auto e : m) w += e;
  return w;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int wa = weight(a);
  const int wb = weight(b);
  if (wa != wb) return wa < wb;
  return b < a;
}

int default_truncation() {
  const char* env = std::getenv("ELLBUNDLE_TRUNCATION");
  if (env == nullptr || *env == '\0') return 8;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 64) {
    throw DomainError("config", std::string("ELLBUNDLE_TRUNCATION must be an integer in [1, 64], got '") + env + "'");
  }
  return static_cast<int>(value);
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxGenerators; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial mono_add(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int i = 0; i < kMaxGenerators; ++i) r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return r;
}

Monomial mono_sub(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int i = 0; i < kMaxGenerators; ++i) r[i] = static_cast<std::uint8_t>(a[i] - b[i]);
  return r;
}

Monomial unit(int i) {
  Monomial m{};
  m[static_cast<std::size_t>(i)] = 1;
  return m;
}

Monomial power_of(int i, int k) {
  Monomial m{};
  m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
  return m;
}

// Visits every monomial in k variables of weight <= n.
void for_each_monomial(int k, int n, const std::function<void(const Monomial&)>& visit) {
  Monomial m{};
  std::function<void(int, int)> rec = [&](int var, int budget) {
    if (var == k) {
      visit(m);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      m[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
      rec(var + 1, budget - e);
    }
    m[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, n);
}

std::string canonical_name(std::string_view name) {
  if (name == "σ") return "sigma";
  if (name == "ζ") return "zeta";
  if (name == "α") return "alpha";
  return std::string(name);
}

}  // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpec::RingSpec(std::vector<std::string> generators, std::vector<RewriteRule> rules, int truncation)
    : generators_(std::move(generators)), rules_(std::move(rules)), truncation_(truncation) {
  const int k = static_cast<int>(generators_.size());
  if (k < 1 || k > kMaxGenerators) throw DomainError("ring", "a ring needs 1 to 8 generators");
  if (truncation_ < 1 || truncation_ > 64) throw DomainError("ring", "truncation weight must lie in [1, 64]");
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      if (generators_[static_cast<std::size_t>(i)] == generators_[static_cast<std::size_t>(j)]) {
        throw DomainError("ring", "duplicate generator " + generators_[static_cast<std::size_t>(i)]);
      }
    }
  }
  for (const auto& rule : rules_) {
    if (weight(rule.lhs) == 0) throw DomainError("ring", "rule with constant left-hand side");
    for (int i = k; i < kMaxGenerators; ++i) {
      if (rule.lhs[static_cast<std::size_t>(i)] != 0) throw DomainError("ring", "rule uses an unknown generator");
    }
    for (const auto& [m, q] : rule.rhs) {
      if (weight(m) != weight(rule.lhs)) throw DomainError("ring", "rewrite rules must be homogeneous");
      if (!(m < rule.lhs)) throw DomainError("ring", "rule right-hand side must be lexicographically smaller");
    }
  }
  for_each_monomial(k, truncation_, [this](const Monomial& m) {
    if (!is_normal(m)) table_.emplace(m, rewrite(m));
  });
}

std::vector<Term> RingSpec::rewrite(const Monomial& m) const {
  std::map<Monomial, Rational> acc;
  std::function<void(const Monomial&, const Rational&)> push = [&](const Monomial& x, const Rational& q) {
    for (const auto& rule : rules_) {
      if (!divides(rule.lhs, x)) continue;
      const Monomial rest = mono_sub(x, rule.lhs);
      for (const auto& [r, c] : rule.rhs) push(mono_add(r, rest), q * c);
      return;
    }
    acc[x] += q;
  };
  push(m, Rational(1));
  std::vector<Term> out;
  for (auto& [x, q] : acc) {
    if (q != 0) out.emplace_back(x, q);
  }
  return out;
}

bool RingSpec::is_normal(const Monomial& m) const {
  return std::none_of(rules_.begin(), rules_.end(), [&](const RewriteRule& r) { return divides(r.lhs, m); });
}

const std::vector<Term>& RingSpec::reduce(const Monomial& m) const {
  auto it = table_.find(m);
  if (it == table_.end()) throw DomainError("ring", "monomial is normal or above the truncation weight");
  return it->second;
}

int RingSpec::generator_index(std::string_view name) const {
  const std::string key = canonical_name(name);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == key) return static_cast<int>(i);
  }
  throw DomainError("unknown-generator", "no generator named '" + key + "'");
}

bool RingSpec::has_generator(std::string_view name) const {
  const std::string key = canonical_name(name);
  return std::find(generators_.begin(), generators_.end(), key) != generators_.end();
}

Monomial RingSpec::generator_monomial(int index) const {
  if (index < 0 || index >= static_cast<int>(generators_.size())) {
    throw DomainError("unknown-generator", "generator index out of range");
  }
  return unit(index);
}

std::string RingSpec::monomial_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += generators_[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (&a == &b) return true;
  if (a.generators_ != b.generators_ || a.truncation_ != b.truncation_) return false;
  if (a.rules_.size() != b.rules_.size()) return false;
  for (std::size_t i = 0; i < a.rules_.size(); ++i) {
    if (a.rules_[i].lhs != b.rules_[i].lhs || a.rules_[i].rhs != b.rules_[i].rhs) return false;
  }
  return true;
}

namespace {

// sigma^2 -> -L sigma, with sigma first and L third.
RewriteRule sigma_rule() { return {power_of(0, 2), {{mono_add(unit(0), unit(2)), Rational(-1)}}}; }

RewriteRule zero_rule(const Monomial& lhs) { return {lhs, {}}; }

}  // namespace

RingPtr RingSpec::fibration(int truncation) {
  return std::make_shared<const RingSpec>(std::vector<std::string>{"sigma", "zeta", "L"},
                                          std::vector<RewriteRule>{sigma_rule()}, truncation);
}

RingPtr RingSpec::section(int truncation) {
  return std::make_shared<const RingSpec>(std::vector<std::string>{"sigma", "alpha", "L"},
                                          std::vector<RewriteRule>{sigma_rule()}, truncation);
}

RingPtr RingSpec::surface(int truncation) {
  return std::make_shared<const RingSpec>(
      std::vector<std::string>{"sigma", "alpha", "L"},
      std::vector<RewriteRule>{sigma_rule(), zero_rule(power_of(1, 2)), zero_rule(mono_add(unit(1), unit(2))),
                               zero_rule(power_of(2, 2))},
      truncation);
}

RingPtr RingSpec::single_curve(int n, int truncation) {
  if (n < 1) throw DomainError("range", "single-curve ring needs n >= 1");
  return std::make_shared<const RingSpec>(std::vector<std::string>{"h", "t"},
                                          std::vector<RewriteRule>{zero_rule(power_of(0, n)), zero_rule(power_of(1, 2))},
                                          truncation);
}

// ---------------------------------------------------------------------------
// GradedClass

GradedClass::GradedClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("ring", "null ring");
}

GradedClass GradedClass::constant(RingPtr ring, const Rational& q) {
  GradedClass x(std::move(ring));
  x.add_term(Monomial{}, q);
  return x;
}

GradedClass GradedClass::generator(RingPtr ring, std::string_view name) {
  GradedClass x(ring);
  x.add_term(unit(ring->generator_index(name)), Rational(1));
  return x;
}

GradedClass GradedClass::from_terms(RingPtr ring, const std::vector<Term>& terms) {
  GradedClass x(std::move(ring));
  for (const auto& [m, q] : terms) x.add_term(m, q);
  return x;
}

void GradedClass::add_term(const Monomial& m, const Rational& q) {
  if (q == 0 || weight(m) > ring_->truncation()) return;
  auto accumulate = [this](const Monomial& x, const Rational& c) {
    auto [it, inserted] = terms_.emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  };
  if (ring_->is_normal(m)) {
    accumulate(m, q);
    return;
  }
  for (const auto& [x, c] : ring_->reduce(m)) accumulate(x, q * c);
}

void require_same_ring(const GradedClass& a, const GradedClass& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring())) {
    throw DomainError("ring-mismatch", "classes belong to different rings");
  }
}

Rational GradedClass::constant_term() const { return coefficient(Monomial{}); }

Rational GradedClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedClass::coefficient(std::string_view monomial) const {
  const GradedClass probe = parse_class(ring_, monomial);
  if (probe.terms_.size() != 1 || probe.terms_.begin()->second != 1) {
    throw DomainError("parse", "'" + std::string(monomial) + "' is not a normal-form monomial");
  }
  return coefficient(probe.terms_.begin()->first);
}

GradedClass GradedClass::part(int w) const {
  GradedClass out(ring_);
  for (const auto& [m, q] : terms_) {
    if (weight(m) == w) out.terms_.emplace(m, q);
  }
  return out;
}

int GradedClass::max_weight() const { return terms_.empty() ? -1 : weight(terms_.rbegin()->first); }

GradedClass GradedClass::operator-() const {
  GradedClass out(*this);
  for (auto& [m, q] : out.terms_) q = -q;
  return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& b) {
  require_same_ring(*this, b);
  for (const auto& [m, q] : b.terms_) add_term(m, q);
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& b) {
  require_same_ring(*this, b);
  for (const auto& [m, q] : b.terms_) add_term(m, -q);
  return *this;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
  GradedClass out(a);
  out += b;
  return out;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) {
  GradedClass out(a);
  out -= b;
  return out;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a, b);
  GradedClass out(a.ring_);
  const int n = a.ring_->truncation();
  for (const auto& [ma, qa] : a.terms_) {
    const int wa = weight(ma);
    for (const auto& [mb, qb] : b.terms_) {
      if (wa + weight(mb) > n) break;  // b's terms are weight-ordered
      out.add_term(mono_add(ma, mb), qa * qb);
    }
  }
  return out;
}

GradedClass operator*(const Rational& q, const GradedClass& a) {
  GradedClass out(a.ring_);
  if (q == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, q * c);
  return out;
}

GradedClass& GradedClass::operator*=(const GradedClass& b) { return *this = *this * b; }

bool operator==(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a, b);
  return a.terms_ == b.terms_;
}

std::string GradedClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    const bool negative = q < 0;
    const Rational mag = negative ? Rational(-q) : q;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (weight(m) == 0) {
      s += ellbundle::to_string(mag);
    } else if (mag == 1) {
      s += ring_->monomial_string(m);
    } else {
      s += ellbundle::to_string(mag) + "*" + ring_->monomial_string(m);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Series

GradedClass exp(const GradedClass& x) {
  if (x.constant_term() != 0) throw DomainError("constant-term", "exp needs a class with zero constant term");
  const int n = x.ring()->truncation();
  // Horner: 1 + x(1 + x/2(1 + x/3(...))).
  GradedClass acc = GradedClass::constant(x.ring(), 1);
  for (int k = n; k >= 1; --k) {
    acc = GradedClass::constant(x.ring(), 1) + Rational(1, k) * (x * acc);
  }
  return acc;
}

GradedClass inverse(const GradedClass& x) {
  const Rational c0 = x.constant_term();
  if (c0 == 0) throw DomainError("constant-term", "inverse needs a nonzero constant term");
  const GradedClass one = GradedClass::constant(x.ring(), 1);
  // x = c0 (1 + y) with y nilpotent.
  const GradedClass y = Rational(1) / c0 * x - one;
  GradedClass acc = one;
  for (int k = x.ring()->truncation(); k >= 1; --k) acc = one - y * acc;
  return Rational(1) / c0 * acc;
}

GradedClass pow(const GradedClass& x, int k) {
  if (k < 0) return pow(inverse(x), -k);
  GradedClass result = GradedClass::constant(x.ring(), 1);
  GradedClass base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

GradedClass substitute(const GradedClass& x, const RingPtr& target, const std::vector<GradedClass>& images) {
  const std::size_t k = x.ring()->generators().size();
  if (images.size() != k) throw DomainError("ring-mismatch", "one image per source generator is required");
  for (const auto& img : images) {
    if (img.ring() != target && !(*img.ring() == *target)) {
      throw DomainError("ring-mismatch", "images must lie in the target ring");
    }
  }
  std::vector<std::vector<GradedClass>> powers(k);
  GradedClass out(target);
  for (const auto& [m, q] : x.terms()) {
    GradedClass term = GradedClass::constant(target, q);
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(GradedClass::constant(target, 1));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      term *= cache[m[i]];
    }
    out += term;
  }
  return out;
}

GradedClass substitute(const GradedClass& x, const RingPtr& target,
                       const std::map<std::string, GradedClass>& images) {
  std::vector<GradedClass> list;
  for (const auto& name : x.ring()->generators()) {
    auto it = images.find(name);
    if (it != images.end()) {
      list.push_back(it->second);
    } else if (target->has_generator(name)) {
      list.push_back(GradedClass::generator(target, name));
    } else {
      list.push_back(GradedClass(target));
    }
  }
  return substitute(x, target, list);
}

std::vector<Rational> series_ratio_coefficients(std::int64_t c, int terms) {
  if (terms < 1) return {};
  // (1 - e^{cy}) / (1 - e^y) = (sum_k c^k y^{k-1} / k!) / (sum_k y^{k-1} / k!).
  std::vector<Rational> num(static_cast<std::size_t>(terms));
  std::vector<Rational> den(static_cast<std::size_t>(terms));
  Rational ck = 1;
  for (int j = 0; j < terms; ++j) {
    ck *= c;
    num[static_cast<std::size_t>(j)] = ck / factorial(j + 1);
    den[static_cast<std::size_t>(j)] = Rational(1) / factorial(j + 1);
  }
  std::vector<Rational> q(static_cast<std::size_t>(terms));
  for (int j = 0; j < terms; ++j) {
    Rational r = num[static_cast<std::size_t>(j)];
    for (int i = 0; i < j; ++i) r -= q[static_cast<std::size_t>(i)] * den[static_cast<std::size_t>(j - i)];
    q[static_cast<std::size_t>(j)] = r / den[0];
  }
  return q;
}

GradedClass series_ratio(std::int64_t c, const GradedClass& x) {
  if (x.constant_term() != 0) throw DomainError("constant-term", "series_ratio needs zero constant term");
  const int n = x.ring()->truncation();
  const auto q = series_ratio_coefficients(c, n + 1);
  GradedClass acc(x.ring());
  for (int j = n; j >= 0; --j) acc = GradedClass::constant(x.ring(), q[static_cast<std::size_t>(j)]) + x * acc;
  return acc;
}

Rational P(const Rational& c) { return c * (2 * c - 1) * (c - 1) / 12; }

// ---------------------------------------------------------------------------
// Chern data

GradedClass chern_to_character(int rank, const GradedClass& c) {
  const RingPtr& ring = c.ring();
  if (c.constant_term() != 1) throw DomainError("chern", "total Chern class must have constant term 1");
  const int n = ring->truncation();
  std::vector<GradedClass> ck;
  std::vector<GradedClass> p;
  for (int k = 0; k <= n; ++k) ck.push_back(c.part(k));
  p.push_back(GradedClass::constant(ring, rank));
  GradedClass ch = GradedClass::constant(ring, rank);
  for (int k = 1; k <= n; ++k) {
    GradedClass pk = Rational(k % 2 == 1 ? k : -k) * ck[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) {
      const GradedClass t = ck[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) {
        pk += t;
      } else {
        pk -= t;
      }
    }
    ch += Rational(1) / factorial(k) * pk;
    p.push_back(std::move(pk));
  }
  return ch;
}

GradedClass character_to_chern(const GradedClass& ch) {
  const RingPtr& ring = ch.ring();
  const int n = ring->truncation();
  std::vector<GradedClass> p{GradedClass::constant(ring, ch.constant_term())};
  std::vector<GradedClass> ck{GradedClass::constant(ring, 1)};
  GradedClass c = GradedClass::constant(ring, 1);
  for (int k = 1; k <= n; ++k) {
    p.push_back(factorial(k) * ch.part(k));
    GradedClass r = p[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) {
      const GradedClass t = ck[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) {
        r -= t;
      } else {
        r += t;
      }
    }
    GradedClass cnew = Rational(k % 2 == 1 ? 1 : -1, k) * r;
    c += cnew;
    ck.push_back(std::move(cnew));
  }
  return c;
}

ChernData ChernData::from_total_chern(int rank, const GradedClass& c) {
  return ChernData(rank, c, chern_to_character(rank, c));
}

ChernData ChernData::from_character(const GradedClass& ch) {
  const Rational r = ch.constant_term();
  if (denominator(r) != 1) throw DomainError("chern", "rank must be an integer");
  const int rank = static_cast<int>(numerator(r));
  return ChernData(rank, character_to_chern(ch), ch);
}

}  // namespace ellbundle
