#pragma once

// Names for the groups the toolkit talks about: a family of Lie type, a
// dimension for the classical ones, and which member of the isogeny chain.

#include "sylbase/integers.hpp"

#include <string>

namespace sylbase::orders {

using arith::Integer;

enum class Family {
    Linear,
    Unitary,
    Symplectic,
    OrthogonalOdd,
    OrthogonalPlus,
    OrthogonalMinus,
    E8,
    E7,
    E6,
    TwistedE6,
    F4,
    ThreeD4,
    G2,
    TwoG2,
};

enum class Variant {
    Simple,     // the simple quotient (L_n^eps, PSp_n, Omega_{2m+1}, POmega_n^eps, ...)
    GLLevel,    // GL_n^eps(q); Sp_n / SO_n for the families without a GL layer
    SLLevel,    // SL_n^eps(q); the universal form for exceptional families
    SOLevel,    // SO_n^eps(q), orthogonal families only
    OmegaLevel, // Omega_n^eps(q), orthogonal families only
};

struct GroupId {
    Family family;
    int dimension = 0;  // n for classical families, 0 for exceptional
    Variant variant = Variant::Simple;

    bool operator==(const GroupId&) const = default;
};

bool is_classical(Family f);
bool is_exceptional(Family f);

// +1 for Linear/E6, -1 for Unitary/TwistedE6, 0 for the rest.
int eps_of(Family f);

// "L", "U", "PSp", "Omega", "POmega+", "POmega-", "E8", ... (simple-group naming)
std::string family_name(Family f);
std::string group_name(const GroupId& g, const Integer& q);

// Checks the dimension conventions (n >= 2 linear/unitary, n >= 4 even
// symplectic, n >= 7 odd / n >= 8 even orthogonal at the simple level; the
// matrix levels accept the smaller dimensions used in index ratios).
// Throws std::domain_error when violated.
void check_dimension(const GroupId& g);

}  // namespace sylbase::orders
