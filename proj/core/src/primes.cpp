#include "sylbase/primes.hpp"

#include <algorithm>
#include <cmath>

namespace sylbase::arith {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // wheel over 2*3*5*7-coprime residues would be overkill; 6k+-1 suffices
    for (std::uint64_t d = 11; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

bool lucas_lehmer(unsigned p) {
    if (p < 2) throw std::domain_error("lucas_lehmer: exponent must be >= 2");
    if (p == 2) return true;  // M_2 = 3
    if (!is_prime(p)) return false;
    const Integer m = (Integer(1) << p) - 1;
    Integer s = 4;
    for (unsigned i = 0; i + 2 < p; ++i) s = (s * s - 2) % m;
    return s == 0;
}

bool is_odd_prime_power(const Integer& q, std::uint64_t* p_out, unsigned* k_out) {
    if (q < 3 || (q & 1) == 0) return false;
    // find smallest prime factor; q fits the grids, so trial division is fine
    Integer rest = q;
    std::uint64_t p = 0;
    for (std::uint64_t d = 3; Integer(d) * d <= q; d += 2) {
        if (rest % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) {
        if (p_out) *p_out = static_cast<std::uint64_t>(q);
        if (k_out) *k_out = 1;
        return true;  // q itself prime
    }
    unsigned k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

const char* qkind_name(QKind k) {
    switch (k) {
        case QKind::Nine: return "nine";
        case QKind::Mersenne: return "mersenne";
        case QKind::Fermat: return "fermat";
    }
    return "?";
}

std::vector<AdmissibleQ> admissible_q(const Integer& bound) {
    if (bound < 3) throw std::domain_error("admissible_q: bound must be >= 3");
    std::vector<AdmissibleQ> out;
    for (unsigned p = 2; (Integer(1) << p) - 1 <= bound; ++p) {
        if (lucas_lehmer(p)) out.push_back({(Integer(1) << p) - 1, QKind::Mersenne});
    }
    for (unsigned k = 1; k <= 6; ++k) {  // F_1 = 5 .. F_6; F_5, F_6 are composite anyway
        const Integer f = (Integer(1) << (1u << k)) + 1;
        if (f > bound) break;
        if (f < (Integer(1) << 62) && is_prime(static_cast<std::uint64_t>(f)))
            out.push_back({f, QKind::Fermat});
    }
    if (bound >= 9) out.push_back({Integer(9), QKind::Nine});
    std::sort(out.begin(), out.end(),
              [](const AdmissibleQ& a, const AdmissibleQ& b) { return a.value < b.value; });
    return out;
}

}  // namespace sylbase::arith
