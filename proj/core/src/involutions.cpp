#include "sylbase/involutions.hpp"

#include "sylbase/primes.hpp"

namespace sylbase::invol {

using namespace arith;
using orders::GroupId;
using orders::Variant;

std::string InvolutionClassLabel::name() const {
    switch (kind) {
        case Kind::TK: return "t" + std::to_string(k);
        case Kind::TKPrime: return "t" + std::to_string(k) + "'";
        case Kind::SK: return "s" + std::to_string(k);
        case Kind::Gamma1: return "gamma1";
        case Kind::GraphMinus3: return "graph(-I3)";
        case Kind::FieldType: return "field";
        case Kind::Other: return "other";
        case Kind::AllOthers: return "all-others";
    }
    return "?";
}

namespace {

Integer pw(const Integer& q, long e) {
    if (e < 0) throw std::domain_error("negative exponent");
    return ipow(q, static_cast<unsigned long>(e));
}

bool square_root_of(const Integer& q, Integer* root) {
    const Integer r = boost::multiprecision::sqrt(q);
    if (r * r == q) {
        if (root) *root = r;
        return true;
    }
    return false;
}

[[noreturn]] void out_of_hypothesis(Family fam, int n, const std::string& why) {
    throw std::domain_error("class_size_bound: " + orders::family_name(fam) +
                            std::to_string(n) + ": " + why);
}

ClassSizeBound make_exact(InvolutionClassLabel label, Integer v, std::string src) {
    return {label, v, true, Rational(v), std::move(src)};
}

ClassSizeBound make_bound(InvolutionClassLabel label, Integer v, std::string src) {
    return {label, v, false, Rational(v), std::move(src)};
}

ClassSizeBound linear_unitary_bound(Family fam, int n, const Integer& q,
                                    const InvolutionClassLabel& label) {
    using K = InvolutionClassLabel::Kind;
    const int eps = orders::eps_of(fam);
    auto epsn = [&](int j) { return (eps == 1 || j % 2 == 0) ? Integer(1) : Integer(-1); };
    const std::string tag = "classsize:" + orders::family_name(fam) + std::to_string(n);
    auto t2_value = [&]() {
        return exact_div(pw(q, 2 * n - 4) * (pw(q, n - 1) - epsn(n - 1)) * (pw(q, n) - epsn(n)),
                         (q * q - 1) * (q - eps), "t2 class");
    };

    if (label.kind == K::TK && label.k == 1) {
        if (n < 4) out_of_hypothesis(fam, n, "t1 needs n >= 4");
        Integer v = exact_div(pw(q, n - 1) * (pw(q, n) - epsn(n)), q - eps, "t1 class");
        return make_exact(label, v, tag + ":t1");
    }
    if (label.kind == K::TK && label.k == 2) {
        if (n < 5) out_of_hypothesis(fam, n, "t2 class size needs n >= 5");
        return make_exact(label, t2_value(), tag + ":t2");
    }
    if (label.kind == K::TK && label.k == 3) {
        if (n < 6) out_of_hypothesis(fam, n, "t3 class size needs n >= 6");
        Integer v = exact_div(pw(q, 3 * n - 9) * (pw(q, n - 2) - epsn(n - 2)) *
                                  (pw(q, n - 1) - epsn(n - 1)) * (pw(q, n) - epsn(n)),
                              (q - eps) * (q * q - 1) * (pw(q, 3) - eps), "t3 class");
        return make_exact(label, v, tag + ":t3");
    }
    if (label.kind == K::Gamma1) {
        if (n == 4)
            return make_bound(label, exact_div(q * q * (pw(q, 3) - eps), Integer(2), "gamma1"),
                              tag + ":gamma1");
        if (n == 6)
            return make_bound(label, pw(q, 6) * (pw(q, 3) - eps) * (pw(q, 5) - eps),
                              tag + ":gamma1");
        if (n == 8 && eps == -1)
            return make_bound(label, unitary8_gamma1_floor(q), tag + ":gamma1");
        out_of_hypothesis(fam, n, "gamma1 bound is encoded for n in {4,6} (and U8)");
    }
    if (label.kind == K::AllOthers) {
        if (n < 5) out_of_hypothesis(fam, n, "the non-t1 minimum needs n >= 5");
        Integer root;
        if (eps == 1 && n == 5 && square_root_of(q, &root)) {
            const Integer d = gcd(Integer(5), q - 1);
            Integer v = exact_div(pw(q, 5) * (q + 1) * (pw(root, 3) - 1) * (q * q + 1) *
                                      (pw(root, 5) - 1),
                                  d, "field-type class");
            return {InvolutionClassLabel{K::FieldType, 0}, v, false, Rational(v),
                    tag + ":field(5,q0^2)"};
        }
        if (n == 6) {
            const Integer d = gcd(Integer(6), q - eps);
            Integer v = exact_div(2 * pw(q, 6) * (pw(q, 3) - eps) * (pw(q, 5) - eps), d,
                                  "n=6 minimum");
            return make_bound(label, v, tag + ":min(n6)");
        }
        return make_bound(label, t2_value(), tag + ":min(t2)");
    }
    out_of_hypothesis(fam, n, "unsupported label " + label.name());
}

ClassSizeBound symplectic_bound(Family fam, int n, const Integer& q,
                                const InvolutionClassLabel& label) {
    using K = InvolutionClassLabel::Kind;
    const std::string tag = "classsize:PSp" + std::to_string(n);
    if (n < 4 || n % 2) out_of_hypothesis(fam, n, "need n >= 4 even");

    if (label.kind == K::TK && label.k == 1) {
        if (n == 4)
            return make_exact(label, exact_div(q * q * (q * q + 1), Integer(2), "t1"),
                              tag + ":t1");
        Integer v = exact_div(pw(q, n - 2) * (pw(q, n) - 1), q * q - 1, "t1 class");
        return make_exact(label, v, tag + ":t1");
    }
    if (n == 4 && ((label.kind == K::TK && label.k == 2) || label.kind == K::TKPrime)) {
        return make_bound(label, exact_div(q * q * (q * q - 1), Integer(2), "t2"), tag + ":t2");
    }
    if (label.kind == K::AllOthers) {
        Integer root;
        const bool sq = square_root_of(q, &root);
        if (n == 4) {
            Integer v = sq ? exact_div(q * q * (q + 1) * (q * q + 1), Integer(2), "min")
                           : exact_div(pw(q, 3) * (q - 1) * (q * q + 1), Integer(2), "min");
            return make_bound(label, v, tag + (sq ? ":min(field)" : ":min(GU2)"));
        }
        if (n == 6) {
            Integer v = sq ? exact_div(pw(root, 9) * (q + 1) * (q * q + 1) * (pw(q, 3) + 1),
                                       Integer(2), "min")
                           : exact_div(pw(q, 6) * (q - 1) * (q * q + 1) * (pw(q, 3) - 1),
                                       Integer(2), "min");
            return make_bound(label, v, tag + (sq ? ":min(field)" : ":min(GU3)"));
        }
        if (n == 8) {
            Integer v = exact_div(pw(q, 8) * (q * q - 1) * (pw(q, 6) - 1), Integer(2), "min");
            return make_bound(label, v, tag + ":min(Sp4(q^2))");
        }
        Integer v = exact_div(pw(q, 2 * n - 4) * (pw(q, n - 2) - 1) * (pw(q, n) - 1),
                              (pw(q, 4) - 1) * (q * q - 1), "min");
        return make_bound(label, v, tag + ":min(t2)");
    }
    out_of_hypothesis(fam, n, "unsupported label " + label.name());
}

ClassSizeBound orth_odd_bound(Family fam, int n, const Integer& q,
                              const InvolutionClassLabel& label) {
    using K = InvolutionClassLabel::Kind;
    if (n < 7 || n % 2 == 0) out_of_hypothesis(fam, n, "need n = 2m+1 >= 7");
    const int m = n / 2;
    const std::string tag = "classsize:Omega" + std::to_string(n);
    if (label.kind == K::SK && label.k == 1)
        return make_bound(label, exact_div(pw(q, m) * (pw(q, m) - 1), Integer(2), "s1"),
                          tag + ":s1");
    if ((label.kind == K::SK && label.k == 2) || label.kind == K::AllOthers) {
        Integer v = exact_div(pw(q, n - 2) * (pw(q, n - 1) - 1), 2 * (q + 1), "s2");
        return make_bound(label, v, tag + ":s2");
    }
    out_of_hypothesis(fam, n, "unsupported label " + label.name());
}

ClassSizeBound orth_even_bound(const OrderCatalog& cat, Family fam, int n, const Integer& q,
                               const InvolutionClassLabel& label) {
    using K = InvolutionClassLabel::Kind;
    if (n < 8 || n % 2) out_of_hypothesis(fam, n, "need n = 2m >= 8");
    const int m = n / 2;
    const int eps = (fam == Family::OrthogonalPlus) ? 1 : -1;
    const std::string tag = "classsize:POmega" + std::string(eps == 1 ? "+" : "-") +
                            std::to_string(n);

    if (label.kind == K::Gamma1 || (label.kind == K::SK && label.k == 1))
        return make_bound(label,
                          exact_div(pw(q, m - 1) * (pw(q, m) - eps), Integer(2), "s1"),
                          tag + ":s1");
    if ((label.kind == K::SK && label.k == 2) || label.kind == K::AllOthers) {
        Integer v = exact_div(pw(q, n - 2) * (pw(q, m) - eps) * (pw(q, m - 1) - eps),
                              2 * (q + 1), "s2");
        return make_bound(label, v, tag + ":s2");
    }
    if (label.kind == K::GraphMinus3) {
        const GroupId so_n{fam, n, Variant::SOLevel};
        const GroupId so_n3{Family::OrthogonalOdd, n - 3, Variant::SOLevel};
        const GroupId so_3{Family::OrthogonalOdd, 3, Variant::SOLevel};
        Integer v = exact_div(cat.order_of(so_n, q),
                              2 * cat.order_of(so_n3, q) * cat.order_of(so_3, q), "graph(-I3)");
        return make_bound(label, v, tag + ":graph3");
    }
    out_of_hypothesis(fam, n, "unsupported label " + label.name());
}

}  // namespace

ClassSizeBound class_size_bound(const OrderCatalog& cat, Family fam, int n, const Integer& q,
                                const InvolutionClassLabel& label) {
    if (q < 3 || (q & 1) == 0)
        throw std::domain_error("class_size_bound: q must be odd and >= 3");
    switch (fam) {
        case Family::Linear:
        case Family::Unitary: return linear_unitary_bound(fam, n, q, label);
        case Family::Symplectic: return symplectic_bound(fam, n, q, label);
        case Family::OrthogonalOdd: return orth_odd_bound(fam, n, q, label);
        case Family::OrthogonalPlus:
        case Family::OrthogonalMinus: return orth_even_bound(cat, fam, n, q, label);
        default:
            throw std::domain_error(
                "class_size_bound: exceptional families use exceptional_class_size_min");
    }
}

Integer exceptional_class_size_min(Family fam, const Integer& q, Rational* exact_out) {
    if (q < 3 || (q & 1) == 0)
        throw std::domain_error("exceptional_class_size_min: q must be odd and >= 3");
    Rational f;
    switch (fam) {
        case Family::E8: f = Rational(pw(q, 112)); break;
        case Family::E7: f = Rational((q - 1) * pw(q, 53), 2); break;
        case Family::E6: f = Rational((q - 1) * pw(q, 25), gcd(Integer(3), q - 1)); break;
        case Family::TwistedE6: f = Rational((q - 1) * pw(q, 25), gcd(Integer(3), q + 1)); break;
        case Family::F4: f = Rational(pw(q, 16)); break;
        case Family::ThreeD4: f = Rational(pw(q, 14)); break;
        case Family::G2: f = Rational(pw(q, 7)); break;
        case Family::TwoG2:
            throw std::domain_error("exceptional_class_size_min: Suzuki/Ree families are out of "
                                    "hypothesis");
        default:
            throw std::domain_error("exceptional_class_size_min: " + orders::family_name(fam) +
                                    " is not exceptional");
    }
    if (exact_out) *exact_out = f;
    return floor_rational(f);
}

Integer psp_large_floor(int n, const Integer& q) {
    if (n < 10) throw std::domain_error("psp_large_floor: needs n >= 10");
    return floor_div(pw(q, 4 * n - 16), Integer(2));
}

Integer unitary_t3_floor(int n, const Integer& q) {
    if (n < 7) throw std::domain_error("unitary_t3_floor: needs n >= 7");
    return floor_div(pw(q, 6 * n - 17), 2 * (q + 1));
}

Integer orth_graph3_floor(int n, const Integer& q) {
    if (n < 7) throw std::domain_error("orth_graph3_floor: needs n >= 7");
    return floor_div(pw(q, 3 * n - 9), Integer(4));
}

Integer unitary8_gamma1_floor(const Integer& q) {
    return exact_div(pw(q, 12) * (pw(q, 3) + 1) * (pw(q, 5) + 1) * (pw(q, 7) + 1), Integer(8),
                     "U8 gamma1 bound");
}

Integer unitary4_gamma1_aut_exact(const Integer& q) { return q * q * (pw(q, 3) + 1); }

Integer unitary4_t2_bound(const Integer& q) {
    return exact_div(pw(q, 4) * (q * q - q + 1) * (q * q + 1), Integer(2), "U4 t2 bound");
}

Integer linear4_other_bound(const Integer& q) {
    return exact_div(pw(q, 4) * (q - 1) * (pw(q, 3) - 1), Integer(2), "L4 bound");
}

Integer orth16_plus_minus4_bound(const OrderCatalog& cat, const Integer& q) {
    const GroupId so16{Family::OrthogonalPlus, 16, Variant::SOLevel};
    const GroupId so12m{Family::OrthogonalMinus, 12, Variant::SOLevel};
    const GroupId so4m{Family::OrthogonalMinus, 4, Variant::SOLevel};
    return exact_div(cat.order_of(so16, q), 2 * cat.order_of(so12m, q) * cat.order_of(so4m, q),
                     "O16+ fourth bound");
}

namespace {

Integer choose2(int n) { return Integer(n) * (n - 1) / 2; }

void need_odd_q(const Integer& q, const char* who) {
    if (q < 3 || (q & 1) == 0)
        throw std::domain_error(std::string(who) + ": q must be odd and >= 3");
}

}  // namespace

CountBound count_t1_wreath_gl1(int n, const Integer& q) {
    need_odd_q(q, "count_t1_wreath_gl1");
    if (n < 2) throw std::domain_error("count_t1_wreath_gl1: n must be >= 2");
    Integer v = Integer(n) + choose2(n) * (q - 1);
    return {InvolutionClassLabel::t(1), v, CountBound::Scope::ExactInL,
            "count:t1_gl1wr(n=" + std::to_string(n) + ")"};
}

CountBound count_t1_wreath_gl2(int m, const Integer& q, int eps, bool plus_point) {
    need_odd_q(q, "count_t1_wreath_gl2");
    if (m < 1) throw std::domain_error("count_t1_wreath_gl2: m must be >= 1");
    if (eps != 1 && eps != -1) throw std::domain_error("count_t1_wreath_gl2: bad eps");
    Integer per_block = q * (q + eps);  // |GL2^eps(q)| / |GL1^eps(q)|^2
    Integer v = Integer(m) * per_block + (plus_point ? 1 : 0);
    return {InvolutionClassLabel::t(1), v, CountBound::Scope::ExactInL,
            "count:t1_gl2wr(m=" + std::to_string(m) + ",eps=" + (eps == 1 ? "+" : "-") + ")"};
}

CountBound count_t2_wreath_gu1(int n, const Integer& q) {
    need_odd_q(q, "count_t2_wreath_gu1");
    if (n < 4) throw std::domain_error("count_t2_wreath_gu1: n must be >= 4");
    const Integer s = q + 1;
    Integer v = choose2(n) * (4 + 4 * (n - 2) * s + (n - 2) * (n - 3) * s * s);
    v = exact_div(v, Integer(4), "t2 count");
    return {InvolutionClassLabel::t(2), v, CountBound::Scope::ExactInL,
            "count:t2_gu1wr(n=" + std::to_string(n) + ")"};
}

CountBound count_orth_wreath(int m, const Integer& q, int eps_block, OrthTail tail,
                             int label_k) {
    need_odd_q(q, "count_orth_wreath");
    if (eps_block != 1 && eps_block != -1)
        throw std::domain_error("count_orth_wreath: bad block sign");
    if (label_k != 1 && label_k != 2)
        throw std::domain_error("count_orth_wreath: label must be s1 or s2");
    if (m < 2) throw std::domain_error("count_orth_wreath: m must be >= 2");

    const Integer s = q - eps_block;  // reflections per O_2^eps block
    Integer v;
    switch (tail) {
        case OrthTail::None:
            v = (label_k == 1) ? Integer(m) * s
                               : Integer(m) + choose2(m) * (s * s + 2 * s);
            break;
        case OrthTail::O1:
            v = (label_k == 1) ? Integer(m) * s + 1
                               : Integer(m) * (1 + s) + choose2(m) * (s * s + 2 * s);
            break;
        case OrthTail::O2Plus:
        case OrthTail::O2Minus: {
            const Integer s_tail = (tail == OrthTail::O2Plus) ? (q - 1) : (q + 1);
            const int w = m - 1;  // permuted blocks
            v = (label_k == 1) ? Integer(w) * s + s_tail
                               : choose2(w) * (s * s + 2 * s) + Integer(w) * (1 + s * s_tail) + 1;
            break;
        }
    }
    return {InvolutionClassLabel::s(label_k), v, CountBound::Scope::ExactInL,
            "count:orthwr(m=" + std::to_string(m) + ",eps=" + (eps_block == 1 ? "+" : "-") +
                ",s" + std::to_string(label_k) + ")"};
}

Psp4Profile psp4_involution_profile(const Integer& q) {
    if ((q & 1) == 0) throw std::domain_error("psp4_involution_profile: q must be odd");
    if (q < 5) throw std::domain_error("psp4_involution_profile: q must be >= 5");
    Psp4Profile p;
    if (q % 4 == 1) {
        p.i2_H = q * q + 4 * q - 2;
        p.count_t1 = q;
        p.count_t2_like = exact_div(q * q + 4 * q - 1, Integer(2), "t2 count");
        p.count_t1prime_bound = exact_div(q * q + 2 * q - 3, Integer(2), "t1' count");
    } else {
        p.i2_H = q * q + 8 * q + 10;
        p.count_t1 = q + 2;
        p.count_t2_like = exact_div(q * q + 8 * q + 11, Integer(2), "t2' count");
        p.count_t1prime_bound = exact_div(q * q + 6 * q + 5, Integer(2), "t1' count");
    }
    return p;
}

}  // namespace sylbase::invol
