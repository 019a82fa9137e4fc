#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "radmom/image.hpp"
#include "radmom/slope.hpp"

namespace radmom {

// 1-D line-sum array of an image along direction a:b. sums[k - offset]
// holds the sum of all pixels with a*i + b*j == k; offset is the smallest
// attainable k (negative for slopes with a negative component).
struct Projection {
    SlopeRatio slope;
    std::int64_t offset = 0;
    std::vector<std::uint64_t> sums;

    std::int64_t k_min() const { return offset; }
    std::int64_t k_max() const {
        return offset + static_cast<std::int64_t>(sums.size()) - 1;
    }

    std::uint64_t total() const;
};

// Attainable [k_min, k_max] of a*i + b*j over a width x height grid.
std::pair<std::int64_t, std::int64_t> projection_range(const SlopeRatio& s,
                                                       int width, int height);

// One bin addition per pixel; bins sized to the exact attainable range.
Projection project(const Image& img, const SlopeRatio& slope);

// The five projections used by the 4th-order reconstruction, in this order.
const std::array<SlopeRatio, 5>& order4_slopes();

// All five order-4 projections in one pass over the image. Result is
// identical to five independent project() calls.
std::array<Projection, 5> project_all_order4(const Image& img);

}  // namespace radmom
