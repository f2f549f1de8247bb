#pragma once

// Permutations on {0..degree-1}.  Products compose left to right:
// (a * b)[x] = b[a[x]], i.e. a acts first.

#include "sylbase/integers.hpp"

#include <cstddef>
#include <vector>

namespace sylbase::permgrp {

using arith::Integer;

class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);                 // identity
    explicit Perm(std::vector<int> images);    // must be a bijection

    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }

    Perm operator*(const Perm& rhs) const;     // this, then rhs
    Perm inverse() const;
    Perm power(const Integer& e) const;        // e >= 0

    bool is_identity() const;
    Integer order() const;                     // lcm of cycle lengths
    int first_moved_point() const;             // -1 for the identity

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

    const std::vector<int>& images() const { return img_; }
    std::size_t hash() const;

private:
    std::vector<int> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace sylbase::permgrp
