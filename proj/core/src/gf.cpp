#include "sylbase/gf.hpp"

#include "sylbase/primes.hpp"

namespace sylbase::permgrp {

GF GF::make(int q) {
    if (q == 9) return GF(9, 3);
    if (q < 3 || q >= 100000 || q % 2 == 0 || !arith::is_prime(static_cast<std::uint64_t>(q)))
        throw std::domain_error("GF::make: field size must be an odd prime or 9, got " +
                                std::to_string(q));
    return GF(q, q);
}

namespace {
// GF(9) element a+3b stands for a + b*i with i^2 = -1 over GF(3)
inline int re(int x) { return x % 3; }
inline int im(int x) { return x / 3; }
inline int mk(int a, int b) { return (a % 3 + 3) % 3 + 3 * ((b % 3 + 3) % 3); }
}  // namespace

int GF::add(int a, int b) const {
    if (q_ != 9) return (a + b) % q_;
    return mk(re(a) + re(b), im(a) + im(b));
}

int GF::sub(int a, int b) const {
    if (q_ != 9) return ((a - b) % q_ + q_) % q_;
    return mk(re(a) - re(b), im(a) - im(b));
}

int GF::mul(int a, int b) const {
    if (q_ != 9) return static_cast<int>((static_cast<long long>(a) * b) % q_);
    // (a1 + b1 i)(a2 + b2 i) = (a1 a2 - b1 b2) + (a1 b2 + a2 b1) i
    return mk(re(a) * re(b) - im(a) * im(b), re(a) * im(b) + re(b) * im(a));
}

int GF::neg(int a) const { return sub(0, a); }

int GF::inv(int a) const {
    if (a == 0) throw std::domain_error("GF::inv(0)");
    for (int x = 1; x < q_; ++x)
        if (mul(a, x) == 1) return x;
    throw std::logic_error("GF::inv: no inverse found");
}

int GF::frob(int a) const {
    if (q_ != 9) return a;
    return mk(re(a), -im(a));  // conjugation a + bi -> a - bi
}

MatGF MatGF::identity(int n) {
    MatGF m;
    m.n = n;
    m.e.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatGF mat_mul(const GF& f, const MatGF& a, const MatGF& b) {
    if (a.n != b.n) throw std::domain_error("mat_mul: size mismatch");
    MatGF c;
    c.n = a.n;
    c.e.assign(static_cast<std::size_t>(a.n * a.n), 0);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            const int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n; ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

MatGF mat_inverse(const GF& f, const MatGF& a) {
    const int n = a.n;
    MatGF work = a;
    MatGF inv = MatGF::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("mat_inverse: singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(work.e[static_cast<std::size_t>(pivot * n + j)],
                      work.e[static_cast<std::size_t>(col * n + j)]);
            std::swap(inv.e[static_cast<std::size_t>(pivot * n + j)],
                      inv.e[static_cast<std::size_t>(col * n + j)]);
        }
        const int scale = f.inv(work.at(col, col));
        for (int j = 0; j < n; ++j) {
            work.at(col, j) = f.mul(work.at(col, j), scale);
            inv.at(col, j) = f.mul(inv.at(col, j), scale);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work.at(r, col) == 0) continue;
            const int factor = work.at(r, col);
            for (int j = 0; j < n; ++j) {
                work.at(r, j) = f.sub(work.at(r, j), f.mul(factor, work.at(col, j)));
                inv.at(r, j) = f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

bool mat_invertible(const GF& f, const MatGF& a) {
    try {
        mat_inverse(f, a);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

MatGF mat_frob(const GF& f, const MatGF& a) {
    MatGF b = a;
    for (int& x : b.e) x = f.frob(x);
    return b;
}

MatGF mat_conj_transpose(const GF& f, const MatGF& a) {
    MatGF b;
    b.n = a.n;
    b.e.assign(a.e.size(), 0);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) b.at(i, j) = f.frob(a.at(j, i));
    return b;
}

std::vector<int> row_vec_mul(const GF& f, const std::vector<int>& v, const MatGF& a) {
    std::vector<int> out(static_cast<std::size_t>(a.n), 0);
    for (int j = 0; j < a.n; ++j) {
        int acc = 0;
        for (int i = 0; i < a.n; ++i) acc = f.add(acc, f.mul(v[static_cast<std::size_t>(i)], a.at(i, j)));
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

}  // namespace sylbase::permgrp
