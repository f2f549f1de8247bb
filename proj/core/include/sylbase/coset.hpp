#pragma once

// The action of G on the right cosets of H, and the regular-orbit / base-size
// certificates computed from it.  Cosets are identified by a canonical
// representative derived from H's stabilizer chain, so no chain for the
// (possibly large-degree) coset image of G is ever needed.

#include "sylbase/errors.hpp"
#include "sylbase/stab_chain.hpp"

namespace sylbase::permgrp {

using sylbase::ResourceError;

struct CosetAction {
    int degree = 0;                 // |G : H|
    int distinguished = 0;          // the coset H itself; its stabilizer is H
    std::vector<Perm> g_images;     // images of G's generators
    std::vector<Perm> h_images;     // images of H's generators
};

// Requires H <= G (membership-checked) and |G:H| <= index_cap.
CosetAction coset_action(const StabChain& g_chain, const std::vector<Perm>& g_gens,
                         const StabChain& h_chain, const std::vector<Perm>& h_gens,
                         long index_cap = 100000);

struct RegularOrbit {
    bool found = false;
    int witness = -1;  // first point of a regular orbit
};

// True iff some orbit of the group generated by `gens` has length group_order.
RegularOrbit find_regular_orbit(const std::vector<Perm>& gens, int degree,
                                const Integer& group_order);

struct BaseSizeCert {
    int base_size = 0;  // 2 or 3 when certified, 0 otherwise
    int beta = -1;      // regular-orbit witness (b=2) or second base point (b=3)
    int gamma = -1;     // third base point (b=3 only)
    bool certified = false;
};

// 2 if H has a regular orbit on G/H; otherwise searches the point stabilizers
// H_beta (over H-orbit representatives) for a regular orbit, certifying 3.
BaseSizeCert base_size_two_or_three(const CosetAction& action, const Integer& h_order);

}  // namespace sylbase::permgrp
