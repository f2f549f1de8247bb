#include "sylbase/integers.hpp"

namespace sylbase::arith {

TwoAdicSplit val2(const Integer& m) {
    if (m <= 0) throw std::domain_error("val2: argument must be positive, got " + to_string(m));
    TwoAdicSplit s;
    s.odd_part = m;
    while ((s.odd_part & 1) == 0) {
        s.odd_part >>= 1;
        ++s.exponent;
    }
    return s;
}

Integer two_part(const Integer& m) {
    return Integer(1) << val2(m).exponent;
}

Integer two_part_power(const Integer& q, long d, int eps) {
    if (q < 3 || (q & 1) == 0) throw std::domain_error("two_part_power: q must be odd and >= 3");
    if (d < 1) throw std::domain_error("two_part_power: d must be positive");
    if (eps != 1 && eps != -1) throw std::domain_error("two_part_power: eps must be +1 or -1");

    if (d % 2 == 1) return two_part(q - eps);
    if (eps == 1) return two_part(q * q - 1) * two_part(Integer(d / 2));
    return Integer(2);
}

Integer factorial_two_exponent(const Integer& m) {
    if (m < 0) throw std::domain_error("factorial_two_part: m must be non-negative");
    Integer e = 0;
    for (Integer k = m >> 1; k > 0; k >>= 1) e += k;
    return e;
}

Integer factorial_two_part(const Integer& m) {
    Integer e = factorial_two_exponent(m);
    return Integer(1) << static_cast<unsigned long>(e);
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd(0,0) is undefined");
    return boost::multiprecision::gcd(a, b);
}

Integer ipow(const Integer& q, unsigned long e) {
    return boost::multiprecision::pow(q, static_cast<unsigned>(e));
}

Integer exact_div(const Integer& a, const Integer& b, const char* what) {
    if (b == 0) throw std::domain_error(std::string(what) + ": division by zero");
    Integer quo, rem;
    boost::multiprecision::divide_qr(a, b, quo, rem);
    if (rem != 0)
        throw std::domain_error(std::string(what) + ": " + to_string(b) + " does not divide " +
                                to_string(a));
    return quo;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b <= 0) throw std::domain_error("floor_div: denominator must be positive");
    Integer quo, rem;
    boost::multiprecision::divide_qr(a, b, quo, rem);
    if (rem < 0) --quo;
    return quo;
}

Integer floor_rational(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
    const Integer& num = boost::multiprecision::numerator(v);
    const Integer& den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace sylbase::arith
