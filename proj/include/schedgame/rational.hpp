#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace schedgame {

// Every scalar quantity in the library is an exact rational. GMP keeps the
// value in lowest terms with a positive denominator, so equality and sign
// tests are exact; no floating point enters any computation path.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Floor of an exact fraction, computed on the integers (no float round-trip).
Integer rational_floor(const Rational& value);

/// Parses "123", "-4" or "7/2". Rejects anything else, including decimal
/// and exponent notation, and zero denominators.
Rational parse_rational(const std::string& text);

/// Canonical "num" / "num/den" rendering, matching parse_rational.
std::string format_rational(const Rational& value);

/// Decimal approximation for report rendering only.
double to_double(const Rational& value);

}  // namespace schedgame
