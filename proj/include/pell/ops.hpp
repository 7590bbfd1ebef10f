#pragma once

#include <cstdint>

namespace pell {

// Thread-local operation tallies used by the benchmark harness and the
// operation-count tests.  Field::mul and Field::sqr bump field_mul,
// Field::inv bumps field_inv, and the two group exponentiations bump
// group_exp once per call.  Field::pow and chi run on the modexp
// primitive and are not counted; sqrt's reduction loop multiplies through
// Field::mul and is.
struct OpCounts {
    std::uint64_t field_mul = 0;
    std::uint64_t field_inv = 0;
    std::uint64_t group_exp = 0;
};

OpCounts& op_counts();

inline void reset_op_counts() { op_counts() = OpCounts{}; }

}  // namespace pell
