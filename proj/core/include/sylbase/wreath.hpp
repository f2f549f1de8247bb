#pragma once

// Brute-force enumeration of the wreath-product models whose involution
// counts back the closed-form counting operations.  Blocks are abstract
// (cyclic, dihedral, generalized quaternion) or small matrix groups; each
// block element carries its +/-1 eigenspace dimensions, which is all the
// type classification needs.
//
// For an element x of the model with x^2 = 1 and x not +-identity, the
// "type" of its image modulo the centre {+-1} is min(e, dim - e), where e is
// the total (-1)-eigenspace dimension; x and -x collapse to one image.

#include "sylbase/errors.hpp"
#include "sylbase/gf.hpp"
#include "sylbase/integers.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace sylbase::permgrp {

using arith::Integer;

enum class BlockKind {
    Cyclic,      // GL_1-style: cyclic of order s, unique involution = (-1)
    Dihedral,    // O_2^eps-style: order 2s; s reflections (1,-1), central -I
    Quaternion,  // Sp_2-style: generalized quaternion of order 2s (s even)
    MatrixGL2,   // GL_2(q), enumerated over GF(q)
    MatrixGU2,   // GU_2(q0) over GF(q0^2); supported for q0 = 3 only
};

struct BlockSpec {
    BlockKind kind;
    int param = 0;  // s for the abstract kinds; q (resp. q0) for matrix kinds
};

enum class WreathTail { None, Point1, O1, O2Plus, O2Minus };

struct WreathModelSpec {
    BlockSpec block;
    int m = 1;  // number of permuted blocks
    WreathTail tail = WreathTail::None;
    int q = 0;  // sets the tail sizes (Point1 -> cyclic q-1; O2eps -> dihedral 2(q-eps))
};

struct WreathCounts {
    Integer model_order;                       // |B|^m * m! * |tail|
    int total_dim = 0;                         // dimension of the represented module
    long long square_identity = 0;             // # x != 1 with x^2 = 1
    long long square_central = 0;              // # x with x^2 = -1 (and x^2 != 1)
    std::map<int, long long> images_by_type;   // k -> # images of type k (from x^2 = 1)
};

// Exhaustively enumerates the model; throws ResourceError when the model
// size exceeds `cap`.
WreathCounts enumerate_wreath_model(const WreathModelSpec& spec,
                                    const Integer& cap = Integer(1000000));

std::string tail_name(WreathTail t);

}  // namespace sylbase::permgrp
