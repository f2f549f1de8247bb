#include "sylbase/sylow.hpp"

#include "sylbase/primes.hpp"

namespace sylbase::sylow {

using namespace arith;

SylowContext SylowContext::make(const GroupId& group, const Integer& q,
                                const Integer& outer_two_part_bound) {
    if (q < 3 || (q & 1) == 0)
        throw std::domain_error("SylowContext: q must be odd and >= 3");
    if (outer_two_part_bound < 1 || (outer_two_part_bound & (outer_two_part_bound - 1)) != 0)
        throw std::domain_error("SylowContext: outer bound must be a power of two");
    SylowContext ctx;
    ctx.group = group;
    ctx.q = q;
    ctx.alpha = two_part_power(q, 2, +1);
    ctx.beta = (q == 9) ? 1 : 0;
    ctx.outer_two_part_bound = outer_two_part_bound;
    return ctx;
}

namespace {

Integer pow_i(const Integer& b, int e) { return ipow(b, static_cast<unsigned long>(e)); }

[[noreturn]] void row_error(const SylowContext& ctx, const std::string& why) {
    throw std::domain_error("sylow2_order_socle: " + orders::group_name(ctx.group, ctx.q) +
                            ": " + why);
}

}  // namespace

Integer sylow2_order_socle(const SylowContext& ctx) {
    const Integer& q = ctx.q;
    const Integer& a = ctx.alpha;
    const int n = ctx.group.dimension;
    const int m = n / 2;

    switch (ctx.group.family) {
        case Family::Linear:
        case Family::Unitary: {
            const int eps = orders::eps_of(ctx.group.family);
            const Integer qe2 = two_part(q - eps);
            if (n % 2 == 1) {
                if (n < 3) row_error(ctx, "row needs n = 2m+1 >= 3");
                return pow_i(a, m) * pow_i(qe2, m) * factorial_two_part(m);
            }
            if (n < 2) row_error(ctx, "row needs n = 2m >= 2");
            const Integer d2 = two_part(gcd(Integer(n), q - eps));
            return exact_div(pow_i(a, m) * pow_i(qe2, m - 1) * factorial_two_part(m), d2,
                             "L_n^eps row divisor");
        }
        case Family::Symplectic:
            if (n < 2 || n % 2) row_error(ctx, "row needs n = 2m >= 2");
            return exact_div(pow_i(a, m) * factorial_two_part(m), Integer(2), "PSp row divisor");
        case Family::OrthogonalOdd:
            if (n < 3 || n % 2 == 0) row_error(ctx, "row needs n = 2m+1 >= 3");
            return exact_div(pow_i(a, m) * factorial_two_part(m), Integer(2),
                             "Omega_n row divisor");
        case Family::OrthogonalPlus: {
            if (n % 2 || m < 3) row_error(ctx, "row needs n = 2m, m >= 3");
            const Integer d = gcd(Integer(4), ipow(q, m) - 1);
            if (m % 2 == 0)
                return exact_div(pow_i(a, m) * factorial_two_part(m), 2 * d, "POmega+ divisor");
            return exact_div(pow_i(a, m - 1) * two_part(q - 1) * factorial_two_part(m - 1), d,
                             "POmega+ divisor");
        }
        case Family::OrthogonalMinus: {
            if (n % 2 || m < 3) row_error(ctx, "row needs n = 2m, m >= 3");
            if (m % 2 == 0) return pow_i(a, m - 1) * factorial_two_part(m - 1);
            const Integer d = gcd(Integer(4), ipow(q, m) + 1);
            return exact_div(pow_i(a, m - 1) * two_part(q + 1) * factorial_two_part(m - 1), d,
                             "POmega- divisor");
        }
        case Family::E8: return Integer(64) * pow_i(a, 8);
        case Family::E7: return Integer(4) * pow_i(a, 7);
        case Family::E6:
        case Family::TwistedE6: {
            const int eps = orders::eps_of(ctx.group.family);
            return Integer(8) * pow_i(a, 4) * pow_i(two_part(q - eps), 2);
        }
        case Family::F4: return Integer(8) * pow_i(a, 4);
        case Family::ThreeD4: return pow_i(a, 2);
        case Family::G2:
            if (q < 5) row_error(ctx, "row needs q >= 5");
            return pow_i(a, 2);
        case Family::TwoG2: {
            std::uint64_t p = 0;
            unsigned k = 0;
            if (!is_odd_prime_power(q, &p, &k) || p != 3 || k % 2 == 0 || q < 27)
                row_error(ctx, "row needs q = 3^(2e+1) >= 27");
            return a;
        }
    }
    row_error(ctx, "no matching row");
}

Integer sylow2_order_full(const SylowContext& ctx) {
    return sylow2_order_socle(ctx) * ctx.outer_two_part_bound;
}

}  // namespace sylbase::sylow
