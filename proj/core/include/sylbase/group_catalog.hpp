#pragma once

// Named small-group constructions loaded from a data file: explicit
// permutation generators, or matrix generators with a projective action and
// optional Frobenius twist.  Every entry carries the expected order, Sylow-2
// order and base size, which the engine asserts after construction.

#include "sylbase/matgroups.hpp"
#include "sylbase/stab_chain.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace sylbase::permgrp {

struct GroupRecipe {
    std::string name;
    Integer expected_order;
    Integer expected_sylow2;
    int expected_base = 0;  // 2 or 3
    std::string note;

    // natural permutation action
    int natural_degree = 0;
    std::vector<std::vector<std::vector<int>>> cycle_gens;

    // projective matrix action
    int field_q = 0;
    int dim = 0;
    std::vector<SemilinearGen> matrix_gens;
};

struct BuiltGroup {
    const GroupRecipe* recipe = nullptr;
    int degree = 0;
    std::vector<Perm> gens;
    StabChain chain;
};

class GroupCatalog {
public:
    static GroupCatalog load(const std::filesystem::path& file);

    const std::vector<GroupRecipe>& recipes() const { return recipes_; }
    const GroupRecipe& find(const std::string& name) const;

    // Constructs the permutation group and checks the documented order.
    BuiltGroup build(const std::string& name) const;

private:
    std::vector<GroupRecipe> recipes_;
};

}  // namespace sylbase::permgrp
