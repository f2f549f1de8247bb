#pragma once

// Deterministic Schreier-Sims.  The chain stores, per level, a base point,
// the generators fixing all earlier base points, and an explicit transversal
// for the basic orbit.  Exact order and membership follow.

#include "sylbase/perm.hpp"

#include <functional>
#include <random>
#include <vector>

namespace sylbase::permgrp {

// Thrown by StabChain::build when an order cap is given and exceeded.
struct OrderCapExceeded : std::runtime_error {
    OrderCapExceeded() : std::runtime_error("stabilizer chain order cap exceeded") {}
};

class StabChain {
public:
    struct Level {
        int base_point = -1;
        std::vector<Perm> gens;
        std::vector<int> orbit;          // orbit of base_point, BFS order
        std::vector<int> orbit_pos;      // point -> index into orbit, or -1
        std::vector<Perm> transversal;   // transversal[i] maps base_point to orbit[i]
    };

    // order_cap, when non-null, aborts the construction with OrderCapExceeded
    // as soon as the (monotonically growing) orbit-size product passes it.
    static StabChain build(int degree, const std::vector<Perm>& gens,
                           const Integer* order_cap = nullptr);

    int degree() const { return degree_; }
    const Integer& order() const { return order_; }
    const std::vector<Level>& levels() const { return levels_; }
    const std::vector<Perm>& strong_gens() const { return strong_gens_; }

    bool contains(const Perm& g) const;

    // Residue of sifting g through levels [from, end); second = level reached.
    std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const;

    // Visits every element exactly once.  Use only when order() is small.
    void for_each_element(const std::function<void(const Perm&)>& visit) const;

    // Uniformly random element (one transversal representative per level).
    Perm random_element(std::mt19937_64& rng) const;

    // Stabilizer of a point: orbit-stabilizer inside this group, returned as
    // a fresh chain (Schreier generators, then Schreier-Sims).
    StabChain point_stabilizer(int point) const;

private:
    void recompute_level(std::size_t i);

    int degree_ = 0;
    Integer order_ = 1;
    std::vector<Level> levels_;
    std::vector<Perm> strong_gens_;
};

// Orbit partition of {0..degree-1} under the given permutations.
std::vector<std::vector<int>> orbits_of(const std::vector<Perm>& gens, int degree);

}  // namespace sylbase::permgrp
