#pragma once

#include <vector>

#include "radmom/int128.hpp"
#include "radmom/projection.hpp"

namespace radmom {

// Order-r moment of a projection over its signed bin index k.
struct Moment1D {
    SlopeRatio slope;
    int order;
    int128_t value;
};

// value = sum over k of sums[k - offset] * k^r, with true (possibly
// negative) k and k^0 == 1 everywhere. r <= 8.
Moment1D moment_1d(const Projection& proj, int r);

// Orders 0..r_max in one pass; powers of k built incrementally per bin.
std::vector<Moment1D> moments_1d_batch(const Projection& proj, int r_max);

}  // namespace radmom
