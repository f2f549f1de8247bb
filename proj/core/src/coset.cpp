#include "sylbase/coset.hpp"

#include <algorithm>
#include <unordered_map>

namespace sylbase::permgrp {

namespace {

// The unique element of Hg minimizing, level by level of H's chain, the image
// of the base point.  Depends only on the coset Hg.
Perm coset_canonical(const StabChain& h_chain, Perm g) {
    for (const auto& lev : h_chain.levels()) {
        std::size_t best = 0;
        int best_img = g[lev.orbit[0]];
        for (std::size_t i = 1; i < lev.orbit.size(); ++i) {
            const int img = g[lev.orbit[i]];
            if (img < best_img) {
                best_img = img;
                best = i;
            }
        }
        g = lev.transversal[best] * g;
    }
    return g;
}

}  // namespace

CosetAction coset_action(const StabChain& g_chain, const std::vector<Perm>& g_gens,
                         const StabChain& h_chain, const std::vector<Perm>& h_gens,
                         long index_cap) {
    for (const Perm& h : h_gens)
        if (!g_chain.contains(h))
            throw std::domain_error("coset_action: H is not a subgroup of G");
    const Integer index = arith::exact_div(g_chain.order(), h_chain.order(), "coset index");
    if (index > index_cap)
        throw ResourceError("coset_action: index " + index.str() + " exceeds cap " +
                            std::to_string(index_cap));
    const int n = static_cast<int>(index);

    std::unordered_map<Perm, int, PermHash> id_of;
    std::vector<Perm> reps;
    reps.reserve(static_cast<std::size_t>(n));
    Perm start = coset_canonical(h_chain, Perm(g_chain.degree()));
    id_of.emplace(start, 0);
    reps.push_back(std::move(start));

    CosetAction act;
    act.degree = n;
    act.distinguished = 0;
    std::vector<std::vector<int>> g_img(g_gens.size());
    for (auto& v : g_img) v.assign(static_cast<std::size_t>(n), -1);

    for (std::size_t head = 0; head < reps.size(); ++head) {
        for (std::size_t s = 0; s < g_gens.size(); ++s) {
            Perm next = coset_canonical(h_chain, reps[head] * g_gens[s]);
            auto [it, fresh] = id_of.emplace(next, static_cast<int>(reps.size()));
            if (fresh) {
                if (static_cast<long>(reps.size()) >= index_cap + 1)
                    throw ResourceError("coset_action: BFS exceeded the index cap");
                reps.push_back(std::move(next));
            }
            g_img[s][head] = it->second;
        }
    }
    if (static_cast<int>(reps.size()) != n)
        throw std::logic_error("coset_action: coset count mismatch (" +
                               std::to_string(reps.size()) + " vs " + index.str() + ")");

    for (auto& v : g_img) act.g_images.emplace_back(std::move(v));
    for (const Perm& h : h_gens) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            img[static_cast<std::size_t>(i)] = id_of.at(coset_canonical(h_chain, reps[static_cast<std::size_t>(i)] * h));
        act.h_images.emplace_back(std::move(img));
    }
    return act;
}

RegularOrbit find_regular_orbit(const std::vector<Perm>& gens, int degree,
                                const Integer& group_order) {
    for (const auto& orb : orbits_of(gens, degree)) {
        if (Integer(static_cast<unsigned>(orb.size())) == group_order)
            return {true, *std::min_element(orb.begin(), orb.end())};
    }
    return {false, -1};
}

BaseSizeCert base_size_two_or_three(const CosetAction& action, const Integer& h_order) {
    BaseSizeCert cert;
    RegularOrbit reg = find_regular_orbit(action.h_images, action.degree, h_order);
    if (reg.found) {
        cert.base_size = 2;
        cert.beta = reg.witness;
        cert.certified = true;
        return cert;
    }
    const StabChain h_image_chain = StabChain::build(action.degree, action.h_images);
    if (h_image_chain.order() != h_order)
        throw std::logic_error("base_size_two_or_three: coset action is not faithful on H");
    for (const auto& orb : orbits_of(action.h_images, action.degree)) {
        const int beta = orb.front();
        if (beta == action.distinguished && orb.size() == 1) continue;
        StabChain stab = h_image_chain.point_stabilizer(beta);
        RegularOrbit reg3 = find_regular_orbit(stab.strong_gens(), action.degree, stab.order());
        if (reg3.found) {
            cert.base_size = 3;
            cert.beta = beta;
            cert.gamma = reg3.witness;
            cert.certified = true;
            return cert;
        }
    }
    return cert;  // uncertified; callers report this loudly
}

}  // namespace sylbase::permgrp
