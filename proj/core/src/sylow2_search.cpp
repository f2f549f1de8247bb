#include "sylbase/sylow2_search.hpp"

#include <algorithm>
#include <set>

namespace sylbase::permgrp {

namespace {

bool is_two_power(const Integer& n) { return n > 0 && arith::val2(n).odd_part == 1; }

// g^(odd part of |g|): a 2-element (possibly the identity)
Perm two_part_of(const Perm& g) { return g.power(arith::val2(g.order()).odd_part); }

// try to absorb h into the current 2-group; returns true on success
bool try_absorb(std::vector<Perm>& gens, StabChain& chain, const Perm& h,
                const Integer& target) {
    if (chain.contains(h)) return false;
    std::vector<Perm> cand = gens;
    cand.push_back(h);
    try {
        StabChain grown = StabChain::build(chain.degree(), cand, &target);
        if (!is_two_power(grown.order())) return false;
        gens = std::move(cand);
        chain = std::move(grown);
        return true;
    } catch (const OrderCapExceeded&) {
        return false;
    }
}

}  // namespace

Sylow2Result sylow2_subgroup(const StabChain& group, std::uint64_t seed, const Integer& enum_cap,
                             int random_budget) {
    Sylow2Result res;
    const Integer target = arith::two_part(group.order());
    res.chain = StabChain::build(group.degree(), {});
    if (target == 1) {
        res.ok = true;
        res.note = "odd group order; trivial Sylow 2-subgroup";
        return res;
    }

    if (group.order() <= enum_cap) {
        // exhaustive: collect the 2-elements, then grow greedily; a maximal
        // closure reached this way has the full 2-part
        std::set<Perm> two_elements;
        group.for_each_element([&](const Perm& g) {
            Perm h = two_part_of(g);
            if (!h.is_identity()) two_elements.insert(std::move(h));
        });
        bool grew = true;
        while (res.chain.order() < target && grew) {
            grew = false;
            for (const Perm& h : two_elements) {
                if (try_absorb(res.gens, res.chain, h, target)) {
                    grew = true;
                    break;
                }
            }
        }
        res.ok = (res.chain.order() == target);
        if (!res.ok)
            res.note = "exhaustive closure stalled at order " + res.chain.order().str() +
                       " of " + target.str();
        return res;
    }

    std::mt19937_64 rng(seed);
    for (int iter = 0; iter < random_budget && res.chain.order() < target; ++iter) {
        Perm h = two_part_of(group.random_element(rng));
        if (h.is_identity()) continue;
        if (try_absorb(res.gens, res.chain, h, target)) continue;
        // retry a few random conjugates before moving on
        for (int c = 0; c < 8 && res.chain.order() < target; ++c) {
            const Perm x = group.random_element(rng);
            if (try_absorb(res.gens, res.chain, x.inverse() * h * x, target)) break;
        }
    }
    res.ok = (res.chain.order() == target);
    if (!res.ok)
        res.note = "random search exhausted its budget at order " + res.chain.order().str() +
                   " of " + target.str();
    return res;
}

}  // namespace sylbase::permgrp
