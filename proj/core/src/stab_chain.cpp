#include "sylbase/stab_chain.hpp"

#include <stdexcept>

namespace sylbase::permgrp {

void StabChain::recompute_level(std::size_t i) {
    Level& lev = levels_[i];
    lev.orbit.clear();
    lev.orbit_pos.assign(static_cast<std::size_t>(degree_), -1);
    lev.transversal.clear();

    lev.orbit.push_back(lev.base_point);
    lev.orbit_pos[static_cast<std::size_t>(lev.base_point)] = 0;
    lev.transversal.push_back(Perm(degree_));
    for (std::size_t head = 0; head < lev.orbit.size(); ++head) {
        const int gamma = lev.orbit[head];
        for (const Perm& s : lev.gens) {
            const int delta = s[gamma];
            if (lev.orbit_pos[static_cast<std::size_t>(delta)] < 0) {
                lev.orbit_pos[static_cast<std::size_t>(delta)] =
                    static_cast<int>(lev.orbit.size());
                lev.orbit.push_back(delta);
                lev.transversal.push_back(lev.transversal[head] * s);
            }
        }
    }
}

std::pair<Perm, std::size_t> StabChain::sift(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const Level& lev = levels_[l];
        const int beta = g[lev.base_point];
        const int pos = lev.orbit_pos[static_cast<std::size_t>(beta)];
        if (pos < 0) return {std::move(g), l};
        g = g * lev.transversal[static_cast<std::size_t>(pos)].inverse();
    }
    return {std::move(g), levels_.size()};
}

StabChain StabChain::build(int degree, const std::vector<Perm>& input_gens,
                           const Integer* order_cap) {
    StabChain c;
    c.degree_ = degree;

    auto check_cap = [&]() {
        if (!order_cap) return;
        Integer prod = 1;
        for (const Level& lev : c.levels_)
            if (!lev.orbit.empty()) prod *= static_cast<unsigned>(lev.orbit.size());
        if (prod > *order_cap) throw OrderCapExceeded{};
    };

    auto add_generator = [&](const Perm& g) {
        // a generator joins every level whose base-point prefix it fixes
        std::size_t j = 0;
        while (j < c.levels_.size() && g[c.levels_[j].base_point] == c.levels_[j].base_point) ++j;
        if (j == c.levels_.size()) {
            Level lev;
            lev.base_point = g.first_moved_point();
            c.levels_.push_back(std::move(lev));
        }
        for (std::size_t l = 0; l <= j; ++l) c.levels_[l].gens.push_back(g);
        c.strong_gens_.push_back(g);
    };

    for (const Perm& g : input_gens) {
        if (g.degree() != degree) throw std::domain_error("StabChain: generator degree mismatch");
        if (!g.is_identity()) add_generator(g);
    }
    if (c.levels_.empty()) {
        c.order_ = 1;
        return c;
    }

    for (std::size_t i = 0; i < c.levels_.size(); ++i) c.recompute_level(i);
    check_cap();

    // Process levels bottom-up; on a sift failure the residue is appended to
    // levels i+1..j and processing resumes at level j.  When the loop leaves
    // level i upward, every level below is complete, so a failed sift is a
    // genuine non-member and each addition strictly grows a stabilizer.
    std::size_t i = c.levels_.size();
    while (i > 0) {
        const std::size_t lev_idx = i - 1;
        c.recompute_level(lev_idx);
        check_cap();
        const Level& lev = c.levels_[lev_idx];
        bool clean = true;
        for (std::size_t oi = 0; oi < lev.orbit.size() && clean; ++oi) {
            for (const Perm& s : lev.gens) {
                const int delta = s[lev.orbit[oi]];
                const int dpos = lev.orbit_pos[static_cast<std::size_t>(delta)];
                Perm schreier =
                    lev.transversal[oi] * s *
                    lev.transversal[static_cast<std::size_t>(dpos)].inverse();
                if (schreier.is_identity()) continue;
                auto [res, j] = c.sift(std::move(schreier), lev_idx + 1);
                if (res.is_identity()) continue;
                if (j == c.levels_.size()) {
                    Level fresh;
                    fresh.base_point = res.first_moved_point();
                    c.levels_.push_back(std::move(fresh));
                }
                for (std::size_t l = lev_idx + 1; l <= j; ++l) c.levels_[l].gens.push_back(res);
                c.strong_gens_.push_back(res);
                c.recompute_level(j);
                check_cap();
                i = j + 1;  // drop back down to level j
                clean = false;
                break;
            }
        }
        if (clean) --i;
    }

    c.order_ = 1;
    for (const Level& lev : c.levels_) c.order_ *= static_cast<unsigned>(lev.orbit.size());
    return c;
}

bool StabChain::contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    auto [res, lev] = sift(g);
    return lev == levels_.size() && res.is_identity();
}

void StabChain::for_each_element(const std::function<void(const Perm&)>& visit) const {
    // product of one transversal representative per level, deepest first
    std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t l, const Perm& acc) {
        if (l == 0) {
            visit(acc);
            return;
        }
        const Level& lev = levels_[l - 1];
        for (const Perm& t : lev.transversal) rec(l - 1, acc * t);
    };
    rec(levels_.size(), Perm(degree_));
}

Perm StabChain::random_element(std::mt19937_64& rng) const {
    Perm acc(degree_);
    for (std::size_t l = levels_.size(); l > 0; --l) {
        const Level& lev = levels_[l - 1];
        std::uniform_int_distribution<std::size_t> pick(0, lev.transversal.size() - 1);
        acc = acc * lev.transversal[pick(rng)];
    }
    return acc;
}

StabChain StabChain::point_stabilizer(int point) const {
    if (point < 0 || point >= degree_) throw std::domain_error("point_stabilizer: bad point");
    const std::vector<Perm>& gens = strong_gens_;
    std::vector<int> orbit{point};
    std::vector<int> pos(static_cast<std::size_t>(degree_), -1);
    pos[static_cast<std::size_t>(point)] = 0;
    std::vector<Perm> trans{Perm(degree_)};
    std::vector<Perm> schreier_gens;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (const Perm& s : gens) {
            const int delta = s[orbit[head]];
            if (pos[static_cast<std::size_t>(delta)] < 0) {
                pos[static_cast<std::size_t>(delta)] = static_cast<int>(orbit.size());
                orbit.push_back(delta);
                trans.push_back(trans[head] * s);
            } else {
                Perm g = trans[head] * s *
                         trans[static_cast<std::size_t>(pos[static_cast<std::size_t>(delta)])]
                             .inverse();
                if (!g.is_identity()) schreier_gens.push_back(std::move(g));
            }
        }
    }
    return build(degree_, schreier_gens);
}

std::vector<std::vector<int>> orbits_of(const std::vector<Perm>& gens, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (int start = 0; start < degree; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> orb{start};
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t head = 0; head < orb.size(); ++head) {
            for (const Perm& s : gens) {
                const int d = s[orb[head]];
                if (!seen[static_cast<std::size_t>(d)]) {
                    seen[static_cast<std::size_t>(d)] = 1;
                    orb.push_back(d);
                }
            }
        }
        out.push_back(std::move(orb));
    }
    return out;
}

}  // namespace sylbase::permgrp
