#pragma once

// Orders of Sylow 2-subgroups: |H0| for the socle from the per-family table
// rows (q odd), and |H| = |H0| * outer-part bound supplied by the caller.

#include "sylbase/group_id.hpp"

namespace sylbase::sylow {

using arith::Integer;
using orders::Family;
using orders::GroupId;

struct SylowContext {
    GroupId group;                    // simple-variant id
    Integer q;                        // odd prime power
    Integer alpha;                    // (q^2 - 1)_2
    int beta = 0;                     // 1 iff q = 9
    Integer outer_two_part_bound = 1; // the 2^c constant a driver supplies

    static SylowContext make(const GroupId& group, const Integer& q,
                             const Integer& outer_two_part_bound = Integer(1));
};

// |H0| for H0 a Sylow 2-subgroup of the socle.  Row selection is guarded:
// a query outside the row conditions (e.g. 2G2 with q not an odd power of 3
// at least 27, or G2 with q < 5) throws std::domain_error.
Integer sylow2_order_socle(const SylowContext& ctx);

// |H0| * outer_two_part_bound.
Integer sylow2_order_full(const SylowContext& ctx);

}  // namespace sylbase::sylow
