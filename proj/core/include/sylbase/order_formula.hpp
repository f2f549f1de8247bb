#pragma once

// The factored notation used by the order catalog files:
//
//   formula := [ INT '*' ] [ 'q' | 'q^' INT ] factor* [ '/' denom ]
//   factor  := '(' 'q' [ '^' INT ] ('-' | '+') '1' ')'
//   denom   := INT factor* | factor+
//
// e.g.  "q^4(q^2-1)(q^4-1)"   or   "q^6(q^2-1)(q^4-1)(q^6-1)/2".
// A factor (q^d-1) is stored as (d, +1) and (q^d+1) as (d, -1), i.e. the
// sign is the eps in (q^d - eps).  Denominator factors cover the orders
// whose odd part is a cyclotomic quotient (e.g. q^8+q^4+1 = (q^12-1)/(q^4-1)).

#include "sylbase/integers.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sylbase::orders {

using arith::Integer;

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::string msg, std::size_t off)
        : std::runtime_error(std::move(msg)), offset(off) {}
};

struct FactoredOrder {
    Integer multiplier = 1;                         // positive constant
    unsigned q_exponent = 0;                        // power of q in front
    std::vector<std::pair<int, int>> factors;       // (degree, sign): q^degree - sign
    Integer divisor = 1;                            // positive constant
    std::vector<std::pair<int, int>> denom_factors; // divided out exactly

    // Exact evaluation at q >= 2; throws std::domain_error if the divisor
    // does not divide the numerator product (a catalog bug, never silent).
    Integer eval(const Integer& q) const;

    void canonicalize();  // sorts factor lists by (degree, sign)

    bool operator==(const FactoredOrder&) const = default;
};

FactoredOrder parse_order_formula(const std::string& text);
std::string format_order_formula(const FactoredOrder& f);

}  // namespace sylbase::orders
