#include "sylbase/group_catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sylbase::permgrp {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> cur;
    std::string num;
    bool open = false;
    auto flush_num = [&]() {
        if (!num.empty()) {
            cur.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char c : text) {
        if (c == '(') {
            open = true;
            cur.clear();
        } else if (c == ')') {
            flush_num();
            if (!open) throw std::domain_error("group catalog: unbalanced cycle");
            cycles.push_back(cur);
            open = false;
        } else if (c == ',' || c == ' ') {
            flush_num();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            num += c;
        } else {
            throw std::domain_error("group catalog: bad character in cycles");
        }
    }
    if (open || !num.empty()) throw std::domain_error("group catalog: unbalanced cycle");
    return cycles;
}

}  // namespace

GroupCatalog GroupCatalog::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("group catalog file not found: " + file.string());
    GroupCatalog cat;
    GroupRecipe cur;
    bool active = false;
    std::string line;
    std::size_t lineno = 0;

    auto fail = [&](const std::string& why) {
        throw std::runtime_error(file.filename().string() + ":" + std::to_string(lineno) + ": " +
                                 why);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto tk = tokens(line);
        if (tk.empty()) continue;
        const std::string& key = tk[0];

        if (key == "group") {
            if (active) fail("nested group block");
            if (tk.size() != 2) fail("group needs a name");
            cur = GroupRecipe{};
            cur.name = tk[1];
            active = true;
        } else if (!active) {
            fail("directive outside a group block");
        } else if (key == "order") {
            cur.expected_order = Integer(tk.at(1));
        } else if (key == "sylow2-order") {
            cur.expected_sylow2 = Integer(tk.at(1));
        } else if (key == "base-size") {
            cur.expected_base = std::stoi(tk.at(1));
        } else if (key == "note") {
            std::string rest = line;
            rest.erase(0, rest.find("note") + 5);
            cur.note = rest;
        } else if (key == "action") {
            if (tk.at(1) == "natural") {
                cur.natural_degree = std::stoi(tk.at(2));
            } else if (tk.at(1) == "projective") {
                cur.dim = std::stoi(tk.at(2));
                cur.field_q = std::stoi(tk.at(3));
            } else {
                fail("unknown action kind " + tk.at(1));
            }
        } else if (key == "gen") {
            if (tk.at(1) == "cycles") {
                auto pos = line.find('(');
                if (pos == std::string::npos) fail("cycle generator needs cycles");
                cur.cycle_gens.push_back(parse_cycles(line.substr(pos)));
            } else if (tk.at(1) == "mat" || tk.at(1) == "mat-frob" || tk.at(1) == "frob") {
                SemilinearGen g;
                g.frobenius = (tk.at(1) != "mat");
                const int d = cur.dim;
                if (d == 0) fail("matrix generator before projective action line");
                g.mat.n = d;
                if (tk.at(1) == "frob") {
                    g.mat = MatGF::identity(d);
                } else {
                    if (static_cast<int>(tk.size()) != 2 + d * d)
                        fail("matrix generator needs " + std::to_string(d * d) + " entries");
                    for (int i = 0; i < d * d; ++i)
                        g.mat.e.push_back(std::stoi(tk.at(static_cast<std::size_t>(2 + i))));
                }
                cur.matrix_gens.push_back(std::move(g));
            } else {
                fail("unknown generator kind " + tk.at(1));
            }
        } else if (key == "end") {
            if (cur.name.empty() || cur.expected_order == 0) fail("incomplete group block");
            cat.recipes_.push_back(cur);
            active = false;
        } else {
            fail("unknown directive " + key);
        }
    }
    if (active) fail("unterminated group block");
    return cat;
}

const GroupRecipe& GroupCatalog::find(const std::string& name) const {
    for (const auto& r : recipes_)
        if (r.name == name) return r;
    throw std::runtime_error("no group catalog entry named " + name);
}

BuiltGroup GroupCatalog::build(const std::string& name) const {
    const GroupRecipe& r = find(name);
    BuiltGroup out;
    out.recipe = &r;
    if (r.natural_degree > 0) {
        out.degree = r.natural_degree;
        for (const auto& cyc : r.cycle_gens) out.gens.push_back(Perm::from_cycles(r.natural_degree, cyc));
    } else {
        GF f = GF::make(r.field_q);
        ProjectiveSpace space(f, r.dim);
        out.degree = space.point_count();
        out.gens = projective_action(space, r.matrix_gens);
    }
    out.chain = StabChain::build(out.degree, out.gens);
    if (out.chain.order() != r.expected_order)
        throw std::runtime_error("group " + r.name + " built with order " +
                                 out.chain.order().str() + ", documented order is " +
                                 r.expected_order.str());
    return out;
}

}  // namespace sylbase::permgrp
