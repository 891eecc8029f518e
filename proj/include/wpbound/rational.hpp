#pragma once

// Exact integer and rational arithmetic used throughout the calculator.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wpbound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// Canonical text form: "num/den" with den > 0 and gcd 1, or plain "num" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Inverse of to_string. Accepts "num" or "num/den"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Narrowing conversion; throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const Integer& z);

}  // namespace wpbound
