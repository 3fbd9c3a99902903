#pragma once

#include "ellbundle/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace ellbundle {

/// Which field a curve and its points live over: the rationals, or a prime
/// field F_p with p > 3.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws DomainError unless p is a prime > 3.
  static Field prime(std::int64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }
  std::int64_t modulus() const { return modulus_; }

  /// "Q" or "GF(p)".
  std::string name() const;
  /// Inverse of name().
  static Field parse(const std::string& text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElem;
  explicit Field(std::int64_t modulus) : modulus_(modulus) {}
  std::int64_t modulus_;
};

/// Residue modulo a prime; carries its modulus so that mixing moduli is
/// detected.
struct Residue {
  std::int64_t value;
  std::int64_t modulus;
};

/// Exact element of Q or of F_p.
class FieldElem {
 public:
  FieldElem() : value_(Rational(0)) {}
  FieldElem(const Rational& q) : value_(q) {}  // NOLINT: implicit by intent
  /// Reduces `value` into [0, p).
  static FieldElem residue(std::int64_t value, std::int64_t p);
  static FieldElem from_int(std::int64_t value, const Field& field);
  /// Rational strings map into F_p when `field` is prime (denominator must
  /// be invertible mod p).
  static FieldElem from_rational(const Rational& q, const Field& field);
  static FieldElem parse(const std::string& text, const Field& field);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational& as_rational() const;  // throws if prime-field
  std::int64_t as_residue() const;      // throws if rational

  FieldElem operator-() const;
  FieldElem inverse() const;  // throws on zero

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  /// Scalar multiple by an integer.
  FieldElem times(std::int64_t k) const;
  FieldElem pow(std::int64_t e) const;

  /// True iff the element is a square in its field.
  bool is_square() const;
  /// A square root if one exists (rationals: nonnegative root; F_p: the
  /// smaller residue).
  bool sqrt(FieldElem* root) const;

  /// Exact equality; throws DomainError for elements of different fields.
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  /// Total order within one field: numeric for Q, by residue for F_p.
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

  std::string to_string() const;

  friend void require_same_field(const FieldElem& a, const FieldElem& b);

 private:
  explicit FieldElem(Residue r) : value_(r) {}
  std::variant<Rational, Residue> value_;
};

/// Throws DomainError("cross-field", ...) if a and b live over different fields.
void require_same_field(const FieldElem& a, const FieldElem& b);

}  // namespace ellbundle
