#pragma once

// Matrix-to-permutation conversion: actions on the projective points of the
// natural module, with optional Frobenius twist for semilinear generators,
// plus the small matrix-group enumerations used by the wreath oracles.

#include "sylbase/gf.hpp"
#include "sylbase/perm.hpp"

namespace sylbase::permgrp {

class ProjectiveSpace {
public:
    ProjectiveSpace(const GF& field, int dim);

    int point_count() const { return static_cast<int>(points_.size()); }
    const std::vector<int>& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    int index_of(std::vector<int> v) const;  // normalizes, then looks up
    const GF& field() const { return field_; }
    int dim() const { return dim_; }

private:
    void normalize(std::vector<int>& v) const;  // first nonzero coordinate -> 1

    GF field_;
    int dim_;
    std::vector<std::vector<int>> points_;
    std::vector<int> lookup_;  // dense by vector encoding
    int encode(const std::vector<int>& v) const;
};

struct SemilinearGen {
    MatGF mat;
    bool frobenius = false;  // apply x -> x^p entrywise before the matrix
};

// v -> normalize(frob?(v) * M); throws on singular matrices.
Perm projective_perm(const ProjectiveSpace& space, const SemilinearGen& gen);
std::vector<Perm> projective_action(const ProjectiveSpace& space,
                                    const std::vector<SemilinearGen>& gens);

// All invertible n x n matrices (use only for tiny q^(n^2)).
std::vector<MatGF> all_invertible(const GF& f, int n);

// GU_2(q0) inside GL_2(q0^2) with the identity Gram matrix; field must be
// GF(9) (q0 = 3), the one supported extension field.
std::vector<MatGF> all_gu2(const GF& f);

}  // namespace sylbase::permgrp
