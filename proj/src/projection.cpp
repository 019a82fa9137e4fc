#include "radmom/projection.hpp"

#include <stdexcept>

#include "pipeline.hpp"

namespace radmom {

std::uint64_t Projection::total() const {
    std::uint64_t t = 0;
    for (std::uint64_t s : sums) t += s;
    return t;
}

std::pair<std::int64_t, std::int64_t> projection_range(const SlopeRatio& s,
                                                       int width, int height) {
    const std::int64_t ai = static_cast<std::int64_t>(s.a) * (width - 1);
    const std::int64_t bj = static_cast<std::int64_t>(s.b) * (height - 1);
    const std::int64_t lo = (ai < 0 ? ai : 0) + (bj < 0 ? bj : 0);
    const std::int64_t hi = (ai > 0 ? ai : 0) + (bj > 0 ? bj : 0);
    return {lo, hi};
}

Projection project(const Image& img, const SlopeRatio& slope) {
    detail::NullOps ops;
    return detail::project_core(img, slope, ops);
}

const std::array<SlopeRatio, 5>& order4_slopes() {
    static const std::array<SlopeRatio, 5> slopes = {
        SlopeRatio{1, 0}, SlopeRatio{0, 1}, SlopeRatio{1, 1},
        SlopeRatio{-1, 1}, SlopeRatio{1, 2}};
    return slopes;
}

std::array<Projection, 5> project_all_order4(const Image& img) {
    detail::NullOps ops;
    return detail::project_all_order4_core(img, ops);
}

}  // namespace radmom
