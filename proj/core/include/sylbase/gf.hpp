#pragma once

// Small finite fields: GF(p) for odd primes p, and GF(9) as GF(3)[i] with
// i^2 = -1, elements encoded as a + 3b for a,b in {0,1,2}.  Enough for the
// matrix constructions this project needs; larger extension fields are out
// of scope.

#include <stdexcept>
#include <vector>

namespace sylbase::permgrp {

class GF {
public:
    static GF make(int q);  // q an odd prime (q < 100000) or q = 9

    int q() const { return q_; }
    int p() const { return p_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    int inv(int a) const;  // a != 0
    int frob(int a) const; // x -> x^p
    int one() const { return 1; }
    int zero() const { return 0; }

private:
    GF(int q, int p) : q_(q), p_(p) {}
    int q_ = 0, p_ = 0;
};

struct MatGF {
    int n = 0;
    std::vector<int> e;  // row-major

    static MatGF identity(int n);
    int at(int r, int c) const { return e[static_cast<std::size_t>(r * n + c)]; }
    int& at(int r, int c) { return e[static_cast<std::size_t>(r * n + c)]; }
    bool operator==(const MatGF&) const = default;
};

MatGF mat_mul(const GF& f, const MatGF& a, const MatGF& b);
MatGF mat_inverse(const GF& f, const MatGF& a);       // throws if singular
bool mat_invertible(const GF& f, const MatGF& a);
MatGF mat_frob(const GF& f, const MatGF& a);          // entrywise x -> x^p
MatGF mat_conj_transpose(const GF& f, const MatGF& a);
std::vector<int> row_vec_mul(const GF& f, const std::vector<int>& v, const MatGF& a);

}  // namespace sylbase::permgrp
