#include "sylbase/wreath.hpp"

#include "sylbase/matgroups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace sylbase::permgrp {

namespace {

struct BlockTable {
    int size = 0;
    int dim = 0;
    int id = 0;
    int neg = 0;  // the central -identity
    std::vector<int> inv;
    std::vector<int> dminus;              // dim of the (-1)-eigenspace
    std::function<int(int, int)> mul;
    std::vector<int> sq_id;               // elements with b*b = id
    std::vector<int> sq_neg;              // elements with b*b = neg
};

void finish_tables(BlockTable& t) {
    t.inv.assign(static_cast<std::size_t>(t.size), -1);
    for (int a = 0; a < t.size; ++a)
        for (int b = 0; b < t.size; ++b)
            if (t.mul(a, b) == t.id) t.inv[static_cast<std::size_t>(a)] = b;
    for (int a = 0; a < t.size; ++a) {
        const int sq = t.mul(a, a);
        if (sq == t.id) t.sq_id.push_back(a);
        else if (sq == t.neg) t.sq_neg.push_back(a);
    }
}

BlockTable make_cyclic(int s) {
    if (s < 2 || s % 2) throw std::domain_error("cyclic block: order must be even >= 2");
    BlockTable t;
    t.size = s;
    t.dim = 1;
    t.id = 0;
    t.neg = s / 2;
    t.mul = [s](int a, int b) { return (a + b) % s; };
    t.dminus.assign(static_cast<std::size_t>(s), 0);
    t.dminus[static_cast<std::size_t>(s / 2)] = 1;
    finish_tables(t);
    return t;
}

// elements f^d r^i encoded d*s + i, with f r f = r^-1
BlockTable make_dihedral(int s) {
    if (s < 2 || s % 2) throw std::domain_error("dihedral block: rotation order must be even");
    BlockTable t;
    t.size = 2 * s;
    t.dim = 2;
    t.id = 0;
    t.neg = s / 2;  // the rotation -I
    t.mul = [s](int a, int b) {
        const int da = a / s, ia = a % s, db = b / s, ib = b % s;
        const int i = ((db ? -ia : ia) + ib % s + 2 * s) % s;
        return ((da + db) % 2) * s + i;
    };
    t.dminus.assign(static_cast<std::size_t>(2 * s), 0);
    t.dminus[static_cast<std::size_t>(s / 2)] = 2;           // -I
    for (int i = 0; i < s; ++i) t.dminus[static_cast<std::size_t>(s + i)] = 1;  // reflections
    finish_tables(t);
    return t;
}

// elements b^d a^i encoded d*s + i, with b^2 = a^(s/2), b a b^-1 = a^-1
BlockTable make_quaternion(int s) {
    if (s < 4 || s % 2) throw std::domain_error("quaternion block: cyclic part must be even >= 4");
    BlockTable t;
    t.size = 2 * s;
    t.dim = 2;
    t.id = 0;
    t.neg = s / 2;  // z = a^(s/2), the unique involution
    t.mul = [s](int x, int y) {
        const int dx = x / s, ix = x % s, dy = y / s, iy = y % s;
        int i = ((dy ? -ix : ix) + iy + (dx && dy ? s / 2 : 0)) % s;
        i = (i + s) % s;
        return ((dx + dy) % 2) * s + i;
    };
    t.dminus.assign(static_cast<std::size_t>(2 * s), 0);
    t.dminus[static_cast<std::size_t>(s / 2)] = 2;
    finish_tables(t);
    return t;
}

int kernel_dim_2x2(const GF& f, const MatGF& m, int shift /* +1 or -1 on the diagonal */) {
    // dim ker(m - shift*I) over the base field of m
    int a = f.sub(m.at(0, 0), shift == 1 ? 1 : f.neg(1));
    int b = m.at(0, 1);
    int c = m.at(1, 0);
    int d = f.sub(m.at(1, 1), shift == 1 ? 1 : f.neg(1));
    const bool zero = (a == 0 && b == 0 && c == 0 && d == 0);
    if (zero) return 2;
    const int det = f.sub(f.mul(a, d), f.mul(b, c));
    return det == 0 ? 1 : 0;
}

BlockTable make_matrix_block(const GF& field, std::vector<MatGF> elems) {
    BlockTable t;
    t.size = static_cast<int>(elems.size());
    t.dim = 2;
    std::unordered_map<long long, int> index;
    auto code = [&field](const MatGF& m) {
        long long c = 0;
        for (int x : m.e) c = c * field.q() + x;
        return c;
    };
    for (int i = 0; i < t.size; ++i) index.emplace(code(elems[static_cast<std::size_t>(i)]), i);
    const MatGF id = MatGF::identity(2);
    MatGF neg = id;
    neg.at(0, 0) = field.neg(1);
    neg.at(1, 1) = field.neg(1);
    t.id = index.at(code(id));
    t.neg = index.at(code(neg));
    t.dminus.resize(static_cast<std::size_t>(t.size));
    t.inv.resize(static_cast<std::size_t>(t.size));
    for (int i = 0; i < t.size; ++i) {
        const MatGF& m = elems[static_cast<std::size_t>(i)];
        t.dminus[static_cast<std::size_t>(i)] = kernel_dim_2x2(field, m, -1);
        t.inv[static_cast<std::size_t>(i)] = index.at(code(mat_inverse(field, m)));
        const int sq = index.at(code(mat_mul(field, m, m)));
        if (sq == t.id) t.sq_id.push_back(i);
        else if (sq == t.neg) t.sq_neg.push_back(i);
    }
    auto shared = std::make_shared<std::vector<MatGF>>(std::move(elems));
    t.mul = [shared, field, index, code](int a, int b) {
        return index.at(code(mat_mul(field, (*shared)[static_cast<std::size_t>(a)],
                                     (*shared)[static_cast<std::size_t>(b)])));
    };
    return t;
}

BlockTable make_o1() {
    BlockTable t;
    t.size = 2;
    t.dim = 1;
    t.id = 0;
    t.neg = 1;
    t.mul = [](int a, int b) { return a ^ b; };
    t.dminus = {0, 1};
    finish_tables(t);
    return t;
}

BlockTable build_block(const BlockSpec& spec) {
    switch (spec.kind) {
        case BlockKind::Cyclic: return make_cyclic(spec.param);
        case BlockKind::Dihedral: return make_dihedral(spec.param);
        case BlockKind::Quaternion: return make_quaternion(spec.param);
        case BlockKind::MatrixGL2: {
            GF f = GF::make(spec.param);
            return make_matrix_block(f, all_invertible(f, 2));
        }
        case BlockKind::MatrixGU2: {
            if (spec.param != 3)
                throw std::domain_error("MatrixGU2 blocks are supported for q = 3 only");
            GF f = GF::make(9);
            return make_matrix_block(f, all_gu2(f));
        }
    }
    throw std::domain_error("unknown block kind");
}

Integer factorial(int m) {
    Integer f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

}  // namespace

std::string tail_name(WreathTail t) {
    switch (t) {
        case WreathTail::None: return "none";
        case WreathTail::Point1: return "gl1-point";
        case WreathTail::O1: return "O1";
        case WreathTail::O2Plus: return "O2+";
        case WreathTail::O2Minus: return "O2-";
    }
    return "?";
}

WreathCounts enumerate_wreath_model(const WreathModelSpec& spec, const Integer& cap) {
    if (spec.m < 1) throw std::domain_error("enumerate_wreath_model: m must be >= 1");
    BlockTable block = build_block(spec.block);

    BlockTable tail;  // size 0 marks "no tail"
    switch (spec.tail) {
        case WreathTail::None: break;
        case WreathTail::Point1: tail = make_cyclic(static_cast<int>(spec.q - 1)); break;
        case WreathTail::O1: tail = make_o1(); break;
        case WreathTail::O2Plus: tail = make_dihedral(spec.q - 1); break;
        case WreathTail::O2Minus: tail = make_dihedral(spec.q + 1); break;
    }

    WreathCounts out;
    out.model_order = arith::ipow(Integer(block.size), static_cast<unsigned long>(spec.m)) *
                      factorial(spec.m) * (tail.size ? tail.size : 1);
    out.total_dim = block.dim * spec.m + tail.dim;
    if (out.model_order > cap)
        throw ResourceError("wreath model of order " + out.model_order.str() + " exceeds cap " +
                            cap.str());

    // x = (b_1..b_m; pi; t) squares to (b_j b_{pi^-1(j)}; pi^2; t^2), so only
    // involutive pi can contribute; on 2-cycles of pi the partner entry is
    // determined and the pair adds block.dim to each eigenspace.
    std::vector<long long> bucket_id(static_cast<std::size_t>(out.total_dim + 1), 0);
    long long central = 0;

    std::vector<int> perm(static_cast<std::size_t>(spec.m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool invol = true;
        std::vector<int> fixed;
        int pairs = 0;
        for (int j = 0; j < spec.m && invol; ++j) {
            const int pj = perm[static_cast<std::size_t>(j)];
            if (pj == j) fixed.push_back(j);
            else if (perm[static_cast<std::size_t>(pj)] == j) pairs += (pj > j) ? 1 : 0;
            else invol = false;
        }
        if (!invol) continue;

        // want == 0: x^2 = identity; want == 1: x^2 = -identity
        for (int want = 0; want < 2; ++want) {
            const std::vector<int>& choices = want ? block.sq_neg : block.sq_id;
            long long tail_ways_by_dm[4] = {0, 0, 0, 0};
            if (tail.size == 0) {
                if (want == 0) tail_ways_by_dm[0] = 1;  // no tail behaves as +identity
            } else {
                const std::vector<int>& tchoices = want ? tail.sq_neg : tail.sq_id;
                for (int tc : tchoices) ++tail_ways_by_dm[tail.dminus[static_cast<std::size_t>(tc)]];
            }

            // distribution of the fixed-coordinate (-1)-dimension
            std::vector<long long> dist{1};
            for (std::size_t fi = 0; fi < fixed.size(); ++fi) {
                std::vector<long long> next(dist.size() + static_cast<std::size_t>(block.dim), 0);
                for (int c : choices)
                    for (std::size_t e = 0; e < dist.size(); ++e)
                        next[e + static_cast<std::size_t>(block.dminus[static_cast<std::size_t>(c)])] +=
                            dist[e];
                dist = std::move(next);
            }
            // each 2-cycle multiplies the count by |B| (free entry, partner
            // determined) and shifts the (-1)-dimension by block.dim
            long long pair_ways = 1;
            for (int p = 0; p < pairs; ++p) pair_ways *= block.size;
            const int pair_shift = pairs * block.dim;

            for (std::size_t e = 0; e < dist.size(); ++e) {
                if (dist[e] == 0) continue;
                for (int dm_t = 0; dm_t <= 3; ++dm_t) {
                    if (tail_ways_by_dm[dm_t] == 0) continue;
                    const long long ways = dist[e] * pair_ways * tail_ways_by_dm[dm_t];
                    if (want == 1) {
                        central += ways;
                    } else {
                        const int etot = static_cast<int>(e) + pair_shift + dm_t;
                        bucket_id[static_cast<std::size_t>(etot)] += ways;
                    }
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    long long sq_id_total = 0;
    for (long long v : bucket_id) sq_id_total += v;
    out.square_identity = sq_id_total - 1;  // drop the identity element
    out.square_central = central;

    const int D = out.total_dim;
    for (int k = 1; 2 * k <= D; ++k) {
        long long raw = bucket_id[static_cast<std::size_t>(k)];
        if (2 * k != D) raw += bucket_id[static_cast<std::size_t>(D - k)];
        if (raw % 2 != 0)
            throw std::logic_error("wreath model: type bucket not closed under negation");
        if (raw) out.images_by_type[k] = raw / 2;
    }
    return out;
}

}  // namespace sylbase::permgrp
