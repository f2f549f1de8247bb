#pragma once

// Lower bounds for conjugacy-class sizes of involutions in the classical and
// exceptional families, and exact counts of involutions by type inside the
// wreath-product overgroups that contain the Sylow 2-subgroups.

#include "sylbase/order_catalog.hpp"

namespace sylbase::invol {

using arith::Integer;
using arith::Rational;
using orders::Family;
using orders::OrderCatalog;

struct InvolutionClassLabel {
    enum class Kind { TK, TKPrime, SK, Gamma1, GraphMinus3, FieldType, Other, AllOthers };
    Kind kind = Kind::AllOthers;
    int k = 0;  // present only for TK / TKPrime / SK

    static InvolutionClassLabel t(int k) { return {Kind::TK, k}; }
    static InvolutionClassLabel t_prime(int k) { return {Kind::TKPrime, k}; }
    static InvolutionClassLabel s(int k) { return {Kind::SK, k}; }
    static InvolutionClassLabel gamma1() { return {Kind::Gamma1, 0}; }
    static InvolutionClassLabel graph_minus3() { return {Kind::GraphMinus3, 0}; }
    static InvolutionClassLabel all_others() { return {Kind::AllOthers, 0}; }

    std::string name() const;
};

struct ClassSizeBound {
    InvolutionClassLabel label;
    Integer value;    // integer lower bound (floor of `exact` when that is not integral)
    bool is_exact;    // true when `value` is the exact class size
    Rational exact;   // the bound before flooring
    std::string source;
};

// Class-size minima per family.  `fam` is the simple group's family, `n` its
// dimension (ignored for exceptional families).  Queries outside a part's
// hypotheses throw std::domain_error naming the violated condition.
//
// Supported labels by family:
//   Linear/Unitary:  t1 (exact, n>=4), t2 (exact, n>=5), t3 (exact, n>=6),
//                    gamma1 (n in {4,6,8}), all_others (n>=5)
//   Symplectic:      t1 (exact n>=6; the n=4 projective value), t2 (n=4 bound),
//                    all_others (n>=4)
//   OrthogonalOdd:   s1, all_others (both n>=7)
//   OrthogonalPlus/Minus: s1 (= gamma1), s2, graph_minus3 (exact quotient), n>=8
ClassSizeBound class_size_bound(const OrderCatalog& cat, Family fam, int n, const Integer& q,
                                const InvolutionClassLabel& label);

// f_G(q) for the exceptional families: q^112, (q-1)q^53/2, (q-1)q^25/(3,q-eps),
// q^16, q^14, q^7.  The integer returned is floor(f); the exact rational is
// written to *exact_out when non-null.  Suzuki/Ree families are a domain error.
Integer exceptional_class_size_min(Family fam, const Integer& q, Rational* exact_out = nullptr);

// Simplified catch-all lower bounds used by the sweep drivers.
Integer psp_large_floor(int n, const Integer& q);        // floor(q^(4n-16)/2), n >= 10
Integer unitary_t3_floor(int n, const Integer& q);       // floor(q^(6n-17)/(2(q+1)))
Integer orth_graph3_floor(int n, const Integer& q);      // floor(q^(3n-9)/4)
Integer unitary8_gamma1_floor(const Integer& q);         // q^12(q^3+1)(q^5+1)(q^7+1)/8
Integer unitary4_gamma1_aut_exact(const Integer& q);     // q^2(q^3+1)
Integer unitary4_t2_bound(const Integer& q);             // q^4(q^2-q+1)(q^2+1)/2
Integer linear4_other_bound(const Integer& q);           // q^4(q-1)(q^3-1)/2
Integer orth16_plus_minus4_bound(const OrderCatalog& cat, const Integer& q);

// Exact counts of involutions by type inside the wreath overgroups.
struct CountBound {
    InvolutionClassLabel label;
    Integer value;
    enum class Scope { ExactInL, UpperBoundInH } scope = Scope::ExactInL;
    std::string source;
};

// Images of type t1 in GL_1(q) wr S_n:  n + C(n,2)(q-1).
CountBound count_t1_wreath_gl1(int n, const Integer& q);

// Images of type t1 in (GL_2^eps(q) wr S_m) [+ GL_1^eps(q) when plus_point]:
// m q(q+1) for eps=+1, m q(q-1) for eps=-1, plus one for the 1-space summand.
CountBound count_t1_wreath_gl2(int m, const Integer& q, int eps, bool plus_point);

// Images of type t2 in GU_1(q) wr S_n:
// n(n-1)/2 * (1 + (n-2)(q+1) + (n-2)(n-3)(q+1)^2/4).
CountBound count_t2_wreath_gu1(int n, const Integer& q);

enum class OrthTail { None, O1, O2Plus, O2Minus };

// Images of type s1 or s2 in an orthogonal wreath stabiliser.  With tail
// None or O1 the permuted part is O_2^eps(q) wr S_m; with an O_2 tail it is
// O_2^eps(q) wr S_{m-1} perp O_2(q) (matching the displayed counts, which
// are stated in terms of m).
CountBound count_orth_wreath(int m, const Integer& q, int eps_block, OrthTail tail, int label_k);

// Involution bookkeeping for the Sylow 2-subgroup D_{2(q-eps)} wr S_2 of
// PGSp_4(q), q odd >= 5, eps = +1 iff q = 1 mod 4.
struct Psp4Profile {
    Integer i2_H;
    Integer count_t1;
    Integer count_t2_like;        // t2 for q = 1 mod 4, t2' for q = 3 mod 4
    Integer count_t1prime_bound;  // i2_H - count_t1 - count_t2_like
};
Psp4Profile psp4_involution_profile(const Integer& q);

}  // namespace sylbase::invol
