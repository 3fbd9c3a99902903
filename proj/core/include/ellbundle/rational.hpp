#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ellbundle {

/// Exact rational number. Always kept in lowest terms with positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Accepts the Unicode minus sign U+2212 as well
/// as ASCII '-'. Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

Rational factorial(int k);

/// True iff q is a square of a rational; on success writes the
/// nonnegative root to *root.
bool rational_sqrt(const Rational& q, Rational* root);

}  // namespace ellbundle
