#pragma once

// Construction of a Sylow 2-subgroup of a permutation group.  Small groups
// are handled by exhaustive enumeration of 2-elements with greedy closure;
// larger ones by seeded random search.  The result is verified against the
// 2-part of |G| and failure is reported explicitly, never a proper subgroup.

#include "sylbase/stab_chain.hpp"

namespace sylbase::permgrp {

struct Sylow2Result {
    bool ok = false;
    std::vector<Perm> gens;
    StabChain chain;
    std::string note;
};

Sylow2Result sylow2_subgroup(const StabChain& group, std::uint64_t seed = 1,
                             const Integer& enum_cap = Integer(1000000),
                             int random_budget = 20000);

}  // namespace sylbase::permgrp
