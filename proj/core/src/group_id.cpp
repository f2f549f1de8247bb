#include "sylbase/group_id.hpp"

namespace sylbase::orders {

bool is_classical(Family f) {
    switch (f) {
        case Family::Linear:
        case Family::Unitary:
        case Family::Symplectic:
        case Family::OrthogonalOdd:
        case Family::OrthogonalPlus:
        case Family::OrthogonalMinus: return true;
        default: return false;
    }
}

bool is_exceptional(Family f) { return !is_classical(f); }

int eps_of(Family f) {
    switch (f) {
        case Family::Linear:
        case Family::E6: return 1;
        case Family::Unitary:
        case Family::TwistedE6: return -1;
        default: return 0;
    }
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Linear: return "L";
        case Family::Unitary: return "U";
        case Family::Symplectic: return "PSp";
        case Family::OrthogonalOdd: return "Omega";
        case Family::OrthogonalPlus: return "POmega+";
        case Family::OrthogonalMinus: return "POmega-";
        case Family::E8: return "E8";
        case Family::E7: return "E7";
        case Family::E6: return "E6";
        case Family::TwistedE6: return "2E6";
        case Family::F4: return "F4";
        case Family::ThreeD4: return "3D4";
        case Family::G2: return "G2";
        case Family::TwoG2: return "2G2";
    }
    return "?";
}

std::string group_name(const GroupId& g, const Integer& q) {
    std::string s = family_name(g.family);
    if (is_classical(g.family)) s += std::to_string(g.dimension);
    s += "(" + q.str() + ")";
    switch (g.variant) {
        case Variant::Simple: break;
        case Variant::GLLevel: s = "GL-level " + s; break;
        case Variant::SLLevel: s = "SL-level " + s; break;
        case Variant::SOLevel: s = "SO-level " + s; break;
        case Variant::OmegaLevel: s = "Omega-level " + s; break;
    }
    return s;
}

void check_dimension(const GroupId& g) {
    const int n = g.dimension;
    auto fail = [&](const char* why) {
        throw std::domain_error("bad dimension " + std::to_string(n) + " for " +
                                family_name(g.family) + ": " + why);
    };
    switch (g.family) {
        case Family::Linear:
        case Family::Unitary:
            if (g.variant == Variant::Simple && n < 2) fail("need n >= 2");
            if (n < 1) fail("need n >= 1");
            break;
        case Family::Symplectic:
            if (n < 2 || n % 2) fail("need n >= 2 even");
            break;
        case Family::OrthogonalOdd:
            if (g.variant == Variant::Simple && (n < 3 || n % 2 == 0)) fail("need n >= 3 odd");
            if (n < 1 || n % 2 == 0) fail("need n odd");
            break;
        case Family::OrthogonalPlus:
        case Family::OrthogonalMinus:
            if (g.variant == Variant::Simple && n < 6) fail("need n >= 6");
            if (n < 2 || n % 2) fail("need n >= 2 even");
            break;
        default:
            if (n != 0) fail("exceptional families carry no dimension");
            break;
    }
}

}  // namespace sylbase::orders
