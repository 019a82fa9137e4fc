#pragma once

#include <cstdint>
#include <vector>

#include "radmom/image.hpp"
#include "radmom/line_moments.hpp"
#include "radmom/moment_set.hpp"
#include "radmom/slope.hpp"

namespace radmom {

// r+1 pairwise direction-distinct slopes whose order-r 1-D moments pin
// down the r+1 unknowns {M_{p,r-p}}.
struct SlopePlan {
    int order;
    std::vector<SlopeRatio> slopes;
};

// Linear system A x = rhs with A[t][r-p] = C(r,p) * a_t^p * b_t^(r-p);
// unknowns ordered p = r..0.
struct BinomialSystem {
    int order;
    std::vector<std::vector<std::int64_t>> matrix;
    std::vector<int128_t> rhs;
};

// 1:0, 0:1, 1:1, -1:1, then 1:2, 2:1, -1:2, 2:-1, 1:3 as needed, truncated
// to r+1 slopes. 2 <= r <= 8.
SlopePlan default_slope_plan(int r);

BinomialSystem build_system(const SlopePlan& plan,
                            const std::vector<Moment1D>& moments);

// Exact rational elimination. Throws std::invalid_argument on a singular
// system and internal_error if any solution entry is not an integer.
// Returns M_{p,r-p} for p = r..0.
std::vector<MomentEntry> solve_exact(const BinomialSystem& sys);

// All moments with p+q <= r_max via per-order slope plans; projections are
// computed once for the union of slopes across orders. 2 <= r_max <= 8.
MomentSet moments_general(const Image& img, int r_max);

}  // namespace radmom
