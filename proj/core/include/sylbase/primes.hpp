#pragma once

// Deterministic primality utilities for the parameter grids: trial division,
// Lucas-Lehmer for Mersenne numbers, and detection of odd prime powers.

#include "sylbase/integers.hpp"

#include <cstdint>
#include <vector>

namespace sylbase::arith {

// Deterministic primality by trial division (intended for n below ~2^50).
bool is_prime(std::uint64_t n);

// Lucas-Lehmer test for M_p = 2^p - 1.  Requires p >= 2.
bool lucas_lehmer(unsigned p);

// If q = p^k with p an odd prime and k >= 1, returns true and fills p, k.
bool is_odd_prime_power(const Integer& q, std::uint64_t* p_out = nullptr, unsigned* k_out = nullptr);

enum class QKind { Nine, Mersenne, Fermat };

struct AdmissibleQ {
    Integer value;
    QKind kind;
};

const char* qkind_name(QKind k);

// Sorted list {9} + Mersenne primes <= bound + Fermat primes <= bound.
// Mersenne candidates are certified by Lucas-Lehmer; Fermat candidates by
// trial division.  q = 3 is listed once, as a Mersenne prime.
std::vector<AdmissibleQ> admissible_q(const Integer& bound);

}  // namespace sylbase::arith
