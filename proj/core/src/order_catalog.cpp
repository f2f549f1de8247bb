#include "sylbase/order_catalog.hpp"

#include <fstream>

namespace sylbase::orders {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

OrderCatalog OrderCatalog::load(const std::filesystem::path& dir) {
    OrderCatalog cat;
    if (!std::filesystem::is_directory(dir))
        throw CatalogError("order catalog directory not found: " + dir.string());
    for (const auto& de : std::filesystem::directory_iterator(dir)) {
        if (de.path().extension() != ".ord") continue;
        std::ifstream in(de.path());
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            line = strip(line);
            if (line.empty()) continue;
            auto sep = line.find(":=");
            if (sep == std::string::npos)
                throw CatalogError(de.path().filename().string() + ":" + std::to_string(lineno) +
                                   ": missing ':='");
            std::string name = strip(line.substr(0, sep));
            std::string formula = strip(line.substr(sep + 2));
            if (cat.entries_.count(name))
                throw CatalogError("duplicate catalog entry " + name);
            try {
                cat.entries_.emplace(name, parse_order_formula(formula));
            } catch (const ParseError& e) {
                throw CatalogError(de.path().filename().string() + ":" + std::to_string(lineno) +
                                   ": " + e.what());
            }
        }
    }
    if (cat.entries_.empty()) throw CatalogError("order catalog is empty: " + dir.string());
    return cat;
}

const FactoredOrder& OrderCatalog::entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw CatalogError("no order catalog entry named " + name);
    return it->second;
}

bool OrderCatalog::has_entry(const std::string& name) const { return entries_.count(name) > 0; }

std::string OrderCatalog::entry_name(const GroupId& g) {
    switch (g.family) {
        case Family::Linear: return "GL" + std::to_string(g.dimension);
        case Family::Unitary: return "GU" + std::to_string(g.dimension);
        case Family::Symplectic: return "SP" + std::to_string(g.dimension);
        case Family::OrthogonalOdd: return "SO" + std::to_string(g.dimension);
        case Family::OrthogonalPlus: return "SOP" + std::to_string(g.dimension);
        case Family::OrthogonalMinus: return "SOM" + std::to_string(g.dimension);
        case Family::E8: return "E8";
        case Family::E7: return "E7";
        case Family::E6: return "E6";
        case Family::TwistedE6: return "2E6";
        case Family::F4: return "F4";
        case Family::ThreeD4: return "3D4";
        case Family::G2: return "G2";
        case Family::TwoG2: return "2G2";
    }
    throw CatalogError("unhandled family");
}

Integer OrderCatalog::order_of(const GroupId& g, const Integer& q) const {
    check_dimension(g);
    if (!arith::is_odd_prime_power(q))
        throw CatalogError("order_of: q = " + q.str() + " is not an odd prime power");

    const Integer matrix_order = entry(entry_name(g)).eval(q);
    const int n = g.dimension;
    auto unsupported = [&]() -> Integer {
        throw CatalogError("variant not defined for " + family_name(g.family));
    };

    switch (g.family) {
        case Family::Linear:
        case Family::Unitary: {
            if (g.variant == Variant::GLLevel) return matrix_order;
            const Integer sl = arith::exact_div(matrix_order, q - eps_of(g.family), "SL order");
            if (g.variant == Variant::SLLevel) return sl;
            if (g.variant == Variant::Simple)
                return arith::exact_div(sl, arith::gcd(Integer(n), q - eps_of(g.family)),
                                        "centre of SL");
            return unsupported();
        }
        case Family::Symplectic:
            if (g.variant == Variant::GLLevel || g.variant == Variant::SLLevel)
                return matrix_order;
            if (g.variant == Variant::Simple)
                return arith::exact_div(matrix_order, arith::gcd(Integer(2), q - 1),
                                        "centre of Sp");
            return unsupported();
        case Family::OrthogonalOdd:
            if (g.variant == Variant::SOLevel) return matrix_order;
            if (g.variant == Variant::OmegaLevel || g.variant == Variant::Simple)
                return arith::exact_div(matrix_order, Integer(2), "Omega index");
            return unsupported();
        case Family::OrthogonalPlus:
        case Family::OrthogonalMinus: {
            if (g.variant == Variant::SOLevel) return matrix_order;
            if (g.variant == Variant::OmegaLevel)
                return arith::exact_div(matrix_order, Integer(2), "Omega index");
            if (g.variant == Variant::Simple) {
                const int eps = (g.family == Family::OrthogonalPlus) ? 1 : -1;
                const Integer d = arith::gcd(Integer(4), arith::ipow(q, n / 2) - eps);
                return arith::exact_div(matrix_order, d, "POmega divisor");
            }
            return unsupported();
        }
        default: {
            if (g.variant == Variant::SLLevel) return matrix_order;  // universal form
            if (g.variant != Variant::Simple) return unsupported();
            Integer d = 1;
            if (g.family == Family::E7) d = arith::gcd(Integer(2), q - 1);
            if (g.family == Family::E6) d = arith::gcd(Integer(3), q - 1);
            if (g.family == Family::TwistedE6) d = arith::gcd(Integer(3), q + 1);
            return arith::exact_div(matrix_order, d, "centre of universal form");
        }
    }
}

Integer OrderCatalog::index_ratio(std::span<const GroupId> num, std::span<const GroupId> den,
                                  const Integer& q) const {
    Integer a = 1, b = 1;
    for (const auto& g : num) a *= order_of(g, q);
    for (const auto& g : den) b *= order_of(g, q);
    try {
        return arith::exact_div(a, b, "index_ratio");
    } catch (const std::domain_error& e) {
        throw CatalogError(e.what());
    }
}

}  // namespace sylbase::orders
