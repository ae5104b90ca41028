#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace korolat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical representative of a mod m in [0, m).
std::int64_t mod_norm(std::int64_t a, std::int64_t m);

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);

// Inverse of a mod m via extended Euclid; throws OutOfDomain when gcd != 1.
std::int64_t mod_inv(std::int64_t a, std::int64_t m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Parses "n/d", an integer, or a decimal literal ("0.75") to an exact
// rational. Decimals are rationalized from their digits, never through a
// binary float.
Rational parse_rational(const std::string& text);

// "n/d", or "n" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);

BigInt pow_bigint(const BigInt& base, std::uint64_t exp);

} // namespace korolat
