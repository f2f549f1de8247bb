#pragma once

// Exact integer and rational arithmetic used everywhere in the library.
// All quantities are unbounded; nothing in this project ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sylbase::arith {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // always lowest terms, den > 0

// 2^e * odd_part with odd_part odd.
struct TwoAdicSplit {
    unsigned long exponent = 0;
    Integer odd_part = 1;

    Integer reconstruct() const { return (Integer(1) << exponent) * odd_part; }
};

// Splits m >= 1 into 2^e * u with u odd.  Throws std::domain_error for m <= 0.
TwoAdicSplit val2(const Integer& m);

// Largest power of two dividing m, as an integer.
Integer two_part(const Integer& m);

// (q^d - eps)_2 for odd q >= 3, d >= 1, eps in {-1,+1}, via the closed form:
//   d odd             -> (q - eps)_2
//   d even, eps = +1  -> (q^2 - 1)_2 * (d/2)_2
//   d even, eps = -1  -> 2
// Never expands q^d.  Throws std::domain_error for even q, q < 3, d < 1 or bad eps.
Integer two_part_power(const Integer& q, long d, int eps);

// (m!)_2 via the Legendre sum of floor(m / 2^i).  Defined for m >= 0.
Integer factorial_two_part(const Integer& m);

// Exponent of 2 in m! (the Legendre sum itself).
Integer factorial_two_exponent(const Integer& m);

// Positive gcd; (0,0) is a domain error.
Integer gcd(const Integer& a, const Integer& b);

// q^e for e >= 0.
Integer ipow(const Integer& q, unsigned long e);

// Exact quotient; throws std::domain_error if b does not divide a.
Integer exact_div(const Integer& a, const Integer& b, const char* what = "exact_div");

// floor(a/b) for b > 0.
Integer floor_div(const Integer& a, const Integer& b);

Integer floor_rational(const Rational& r);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace sylbase::arith
