#pragma once

#include <cstdint>
#include <string>

#include "radmom/image.hpp"

namespace radmom {

enum class Method { naive, drt };

const char* method_name(Method m);

// Abstract tallies of arithmetic on pixel, bin, and moment values
// (including weight chains that stand in for index powers). Loop and
// array-index arithmetic is not counted; exact divisions count as
// multiplications, subtractions as additions.
struct OpCounts {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
};

// Runs an instrumented (never timed) variant of the chosen pipeline and
// returns exact tallies. For r_max = 4 the drt pipeline satisfies
//   additions       == 5*M*N + 13*M + 15*N + 8
//   multiplications ==         14*M + 16*N + 5
// and the naive pipeline performs 15*M*N additions and 14*M*N
// multiplications. For other orders the drt tally covers projections and
// 1-D moment extraction; the constant-size exact solve is not tallied.
OpCounts count_ops(const Image& img, Method method, int r_max);

}  // namespace radmom
