#include "sylbase/matgroups.hpp"

namespace sylbase::permgrp {

ProjectiveSpace::ProjectiveSpace(const GF& field, int dim) : field_(field), dim_(dim) {
    if (dim < 2 || dim > 6) throw std::domain_error("ProjectiveSpace: dim out of range");
    long long total = 1;
    for (int i = 0; i < dim; ++i) total *= field_.q();
    lookup_.assign(static_cast<std::size_t>(total), -1);

    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    // enumerate normalized representatives: first nonzero coordinate is 1
    for (int lead = dim - 1; lead >= 0; --lead) {
        std::vector<int> w(static_cast<std::size_t>(dim), 0);
        w[static_cast<std::size_t>(lead)] = 1;
        // free coordinates after `lead`
        const int free = dim - lead - 1;
        std::vector<int> idx(static_cast<std::size_t>(free), 0);
        while (true) {
            for (int i = 0; i < free; ++i)
                w[static_cast<std::size_t>(lead + 1 + i)] = idx[static_cast<std::size_t>(i)];
            lookup_[static_cast<std::size_t>(encode(w))] = static_cast<int>(points_.size());
            points_.push_back(w);
            int carry = free - 1;
            while (carry >= 0 && ++idx[static_cast<std::size_t>(carry)] == field_.q()) {
                idx[static_cast<std::size_t>(carry)] = 0;
                --carry;
            }
            if (carry < 0) break;
        }
    }
}

int ProjectiveSpace::encode(const std::vector<int>& v) const {
    long long code = 0;
    for (int i = 0; i < dim_; ++i) code = code * field_.q() + v[static_cast<std::size_t>(i)];
    return static_cast<int>(code);
}

void ProjectiveSpace::normalize(std::vector<int>& v) const {
    for (int i = 0; i < dim_; ++i) {
        const int x = v[static_cast<std::size_t>(i)];
        if (x == 0) continue;
        if (x != 1) {
            const int s = field_.inv(x);
            for (int j = i; j < dim_; ++j)
                v[static_cast<std::size_t>(j)] = field_.mul(v[static_cast<std::size_t>(j)], s);
        }
        return;
    }
    throw std::domain_error("ProjectiveSpace: zero vector");
}

int ProjectiveSpace::index_of(std::vector<int> v) const {
    normalize(v);
    const int idx = lookup_[static_cast<std::size_t>(encode(v))];
    if (idx < 0) throw std::logic_error("ProjectiveSpace: unindexed point");
    return idx;
}

Perm projective_perm(const ProjectiveSpace& space, const SemilinearGen& gen) {
    if (gen.mat.n != space.dim()) throw std::domain_error("projective_perm: dimension mismatch");
    if (!mat_invertible(space.field(), gen.mat))
        throw std::domain_error("projective_perm: singular matrix generator");
    std::vector<int> images(static_cast<std::size_t>(space.point_count()));
    for (int i = 0; i < space.point_count(); ++i) {
        std::vector<int> v = space.point(i);
        if (gen.frobenius)
            for (int& x : v) x = space.field().frob(x);
        images[static_cast<std::size_t>(i)] = space.index_of(row_vec_mul(space.field(), v, gen.mat));
    }
    return Perm(std::move(images));
}

std::vector<Perm> projective_action(const ProjectiveSpace& space,
                                    const std::vector<SemilinearGen>& gens) {
    std::vector<Perm> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(projective_perm(space, g));
    return out;
}

std::vector<MatGF> all_invertible(const GF& f, int n) {
    if (n != 2) throw std::domain_error("all_invertible: only 2x2 enumeration is supported");
    std::vector<MatGF> out;
    const int q = f.q();
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
                    MatGF m;
                    m.n = 2;
                    m.e = {a, b, c, d};
                    out.push_back(std::move(m));
                }
    return out;
}

std::vector<MatGF> all_gu2(const GF& f) {
    if (f.q() != 9) throw std::domain_error("all_gu2: needs the GF(9) field");
    std::vector<MatGF> out;
    const MatGF id = MatGF::identity(2);
    for (const MatGF& m : all_invertible(f, 2)) {
        if (mat_mul(f, m, mat_conj_transpose(f, m)) == id) out.push_back(m);
    }
    return out;
}

}  // namespace sylbase::permgrp
