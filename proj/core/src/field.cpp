#include "ellbundle/field.hpp"

#include "ellbundle/error.hpp"

namespace ellbundle {

namespace {

__extension__ using i128 = __int128;

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<i128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t result = 1 % p;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  // p is prime, so Fermat.
  return powmod(a, p - 2, p);
}

std::int64_t reduce_big(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::int64_t>();
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p <= 3 || !is_prime_number(p)) {
    throw DomainError("field", "prime field modulus must be a prime > 3, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(modulus_) + ")";
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits = text;
  if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') {
    digits = digits.substr(3, digits.size() - 4);
  } else if (digits.rfind("F", 0) == 0) {
    digits = digits.substr(1);
  }
  try {
    std::size_t used = 0;
    const long long p = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(text);
    return prime(p);
  } catch (const std::logic_error&) {
    throw DomainError("field", "unrecognized field '" + text + "' (expected Q or GF(p))");
  }
}

FieldElem FieldElem::residue(std::int64_t value, std::int64_t p) {
  return FieldElem(Residue{mod(value, p), p});
}

FieldElem FieldElem::from_int(std::int64_t value, const Field& field) {
  if (field.is_rational()) return FieldElem(Rational(value));
  return residue(value, field.modulus());
}

FieldElem FieldElem::from_rational(const Rational& q, const Field& field) {
  if (field.is_rational()) return FieldElem(q);
  const std::int64_t p = field.modulus();
  const std::int64_t num = reduce_big(boost::multiprecision::numerator(q), p);
  const std::int64_t den = reduce_big(boost::multiprecision::denominator(q), p);
  if (den == 0) {
    throw DomainError("field", "denominator of " + ellbundle::to_string(q) + " vanishes mod " +
                                   std::to_string(p));
  }
  return residue(mulmod(num, invmod(den, p), p), p);
}

FieldElem FieldElem::parse(const std::string& text, const Field& field) {
  return from_rational(parse_rational(text), field);
}

Field FieldElem::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool FieldElem::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<Rational>(value_) == 0;
}

bool FieldElem::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<Rational>(value_) == 1;
}

const Rational& FieldElem::as_rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw DomainError("cross-field", "expected a rational element");
}

std::int64_t FieldElem::as_residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw DomainError("cross-field", "expected a prime-field element");
}

void require_same_field(const FieldElem& a, const FieldElem& b) {
  const auto* ra = std::get_if<Residue>(&a.value_);
  const auto* rb = std::get_if<Residue>(&b.value_);
  if ((ra == nullptr) != (rb == nullptr) || (ra != nullptr && ra->modulus != rb->modulus)) {
    throw DomainError("cross-field", "arithmetic between elements of " + a.field().name() +
                                         " and " + b.field().name());
  }
}

FieldElem FieldElem::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return residue(-r->value, r->modulus);
  return FieldElem(Rational(-std::get<Rational>(value_)));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("division", "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldElem(Residue{invmod(r->value, r->modulus), r->modulus});
  }
  return FieldElem(Rational(1 / std::get<Rational>(value_)));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (const auto* ra = std::get_if<Residue>(&a.value_)) {
    const auto& rb = std::get<Residue>(b.value_);
    return FieldElem::residue(ra->value + rb.value, ra->modulus);
  }
  return FieldElem(Rational(std::get<Rational>(a.value_) + std::get<Rational>(b.value_)));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (const auto* ra = std::get_if<Residue>(&a.value_)) {
    const auto& rb = std::get<Residue>(b.value_);
    return FieldElem(Residue{mulmod(ra->value, rb.value, ra->modulus), ra->modulus});
  }
  return FieldElem(Rational(std::get<Rational>(a.value_) * std::get<Rational>(b.value_)));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

FieldElem FieldElem::times(std::int64_t k) const { return *this * from_int(k, field()); }

FieldElem FieldElem::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result = from_int(1, field());
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool FieldElem::is_square() const { return sqrt(nullptr); }

bool FieldElem::sqrt(FieldElem* root) const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    // Small moduli only in practice; linear search keeps this exact and simple.
    for (std::int64_t y = 0; y <= r->modulus / 2; ++y) {
      if (mulmod(y, y, r->modulus) == r->value) {
        if (root != nullptr) *root = residue(y, r->modulus);
        return true;
      }
    }
    return false;
  }
  Rational q;
  if (!rational_sqrt(std::get<Rational>(value_), &q)) return false;
  if (root != nullptr) *root = FieldElem(q);
  return true;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (const auto* ra = std::get_if<Residue>(&a.value_)) {
    return ra->value == std::get<Residue>(b.value_).value;
  }
  return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (const auto* ra = std::get_if<Residue>(&a.value_)) {
    return ra->value <=> std::get<Residue>(b.value_).value;
  }
  const auto& qa = std::get<Rational>(a.value_);
  const auto& qb = std::get<Rational>(b.value_);
  if (qa < qb) return std::strong_ordering::less;
  if (qb < qa) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string FieldElem::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return ellbundle::to_string(std::get<Rational>(value_));
}

}  // namespace ellbundle
