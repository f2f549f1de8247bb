#pragma once

#include <stdexcept>

namespace sylbase {

// An operation refused to run because a size threshold would be exceeded
// (enumeration cap, coset index cap, wreath model cap).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sylbase
