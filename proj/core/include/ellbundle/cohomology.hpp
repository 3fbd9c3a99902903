#pragma once

#include "ellbundle/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ellbundle {

inline constexpr int kMaxGenerators = 8;

/// Exponent vector over the generators of a RingSpec.
using Monomial = std::array<std::uint8_t, kMaxGenerators>;

int weight(const Monomial& m);

/// Order used for storage and printing: by weight, then exponent vectors in
/// descending lexicographic order (so the first generator leads).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Term = std::pair<Monomial, Rational>;

/// lhs -> sum of rhs terms. Rules must be homogeneous and every rhs monomial
/// must be lexicographically smaller than lhs, so rewriting terminates.
struct RewriteRule {
  Monomial lhs;
  std::vector<Term> rhs;
};

/// N from ELLBUNDLE_TRUNCATION, default 8. Throws DomainError("config") on
/// an unusable value.
int default_truncation();

/// Truncated graded-commutative ring Q[x_1..x_k]/(rules), generators of
/// weight 1, everything above weight N discarded. Immutable; normal forms
/// of all monomials up to weight N are tabulated at construction.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> generators, std::vector<RewriteRule> rules, int truncation);

  /// Q[sigma, zeta, L]/(sigma^2 + L sigma).
  static std::shared_ptr<const RingSpec> fibration(int truncation = default_truncation());
  /// Q[sigma, alpha, L]/(sigma^2 + L sigma), for a section with c1(M) = alpha.
  static std::shared_ptr<const RingSpec> section(int truncation = default_truncation());
  /// section() with alpha^2 = alpha L = L^2 = 0 (base a curve).
  static std::shared_ptr<const RingSpec> surface(int truncation = default_truncation());
  /// Q[h, t]/(h^n, t^2) for P^{n-1} x E.
  static std::shared_ptr<const RingSpec> single_curve(int n, int truncation = default_truncation());

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int truncation() const { return truncation_; }
  /// Index of a generator; accepts the Greek letters for sigma, zeta, alpha.
  /// Throws DomainError("unknown-generator").
  int generator_index(std::string_view name) const;
  bool has_generator(std::string_view name) const;

  Monomial generator_monomial(int index) const;
  bool is_normal(const Monomial& m) const;
  /// Normal form of a monomial of weight <= N.
  const std::vector<Term>& reduce(const Monomial& m) const;

  std::string monomial_string(const Monomial& m) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  std::vector<Term> rewrite(const Monomial& m) const;

  std::vector<std::string> generators_;
  std::vector<RewriteRule> rules_;
  int truncation_;
  std::map<Monomial, std::vector<Term>> table_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

/// Element of a RingSpec in normal form with exact coefficients.
class GradedClass {
 public:
  explicit GradedClass(RingPtr ring);
  static GradedClass constant(RingPtr ring, const Rational& q);
  static GradedClass generator(RingPtr ring, std::string_view name);
  /// Reduces and truncates the given terms.
  static GradedClass from_terms(RingPtr ring, const std::vector<Term>& terms);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Coefficient of a monomial written as "sigma*zeta" or "L^2" ("1" for the
  /// constant term).
  Rational coefficient(std::string_view monomial) const;
  /// Homogeneous part of weight w.
  GradedClass part(int w) const;
  /// Highest weight with a nonzero term, -1 for zero.
  int max_weight() const;

  GradedClass operator-() const;
  friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const Rational& q, const GradedClass& a);
  GradedClass& operator+=(const GradedClass& b);
  GradedClass& operator-=(const GradedClass& b);
  GradedClass& operator*=(const GradedClass& b);

  GradedClass scale(const Rational& q) const { return q * *this; }

  friend bool operator==(const GradedClass& a, const GradedClass& b);

  /// Canonical text: terms by (weight, lex), "c*m" with c omitted when 1.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& q);

  RingPtr ring_;
  std::map<Monomial, Rational, MonomialOrder> terms_;
};

/// Throws DomainError("ring-mismatch") unless a and b share a ring.
void require_same_ring(const GradedClass& a, const GradedClass& b);

/// sum x^k / k!; x must have zero constant term (DomainError("constant-term")).
GradedClass exp(const GradedClass& x);
/// Multiplicative inverse; needs a nonzero constant term.
GradedClass inverse(const GradedClass& x);
/// x^k for any integer k (k < 0 via inverse).
GradedClass pow(const GradedClass& x, int k);

/// Ring map sending generator i of the source ring to images[i].
GradedClass substitute(const GradedClass& x, const RingPtr& target, const std::vector<GradedClass>& images);
/// Convenience form: generators not named keep their name in `target` when
/// present and map to 0 otherwise.
GradedClass substitute(const GradedClass& x, const RingPtr& target,
                       const std::map<std::string, GradedClass>& images);

/// Coefficients q_0..q_N of (1 - e^{cy}) / (1 - e^y) as a power series in y,
/// by division of the two series after cancelling the common factor y.
std::vector<Rational> series_ratio_coefficients(std::int64_t c, int terms);
/// (1 - e^{cx}) / (1 - e^x) for a class x with zero constant term.
GradedClass series_ratio(std::int64_t c, const GradedClass& x);

/// c(2c - 1)(c - 1) / 12, the weight-2 coefficient of series_ratio.
Rational P(const Rational& c);

/// Parses sums of products of rationals, generators, parenthesized
/// expressions and integer powers, e.g. "3 - 2*zeta + (L + sigma)^2",
/// "1/2*L^2", "exp(-L)". exp() of a class without constant term is allowed.
/// Throws DomainError("parse").
GradedClass parse_class(const RingPtr& ring, std::string_view text);

/// Rank together with total Chern class and Chern character; both are kept
/// and agree under the Newton identities up to the truncation weight.
class ChernData {
 public:
  static ChernData from_total_chern(int rank, const GradedClass& c);
  /// Rank is the constant term of ch, which must be an integer.
  static ChernData from_character(const GradedClass& ch);

  int rank() const { return rank_; }
  const GradedClass& total_chern() const { return c_; }
  const GradedClass& character() const { return ch_; }
  GradedClass c(int k) const { return c_.part(k); }
  GradedClass ch(int k) const { return ch_.part(k); }

 private:
  ChernData(int rank, GradedClass c, GradedClass ch) : rank_(rank), c_(std::move(c)), ch_(std::move(ch)) {}
  int rank_;
  GradedClass c_;
  GradedClass ch_;
};

/// Newton identities p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k,
/// ch_k = p_k / k!.
GradedClass chern_to_character(int rank, const GradedClass& c);
GradedClass character_to_chern(const GradedClass& ch);

}  // namespace ellbundle
