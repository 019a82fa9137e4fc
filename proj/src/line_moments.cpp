#include "radmom/line_moments.hpp"

#include <stdexcept>

#include "pipeline.hpp"

namespace radmom {

Moment1D moment_1d(const Projection& proj, int r) {
    if (r < 0 || r > 8)
        throw std::invalid_argument("1-D moment order must be between 0 and 8");
    int128_t acc = 0;
    std::int64_t k = proj.offset;
    for (std::uint64_t bin : proj.sums) {
        int128_t kp = 1;  // k^0 == 1 even at k == 0
        for (int t = 0; t < r; ++t) kp = checked_mul(kp, k);
        acc = checked_add(acc, checked_mul(static_cast<int128_t>(bin), kp));
        ++k;
    }
    return Moment1D{proj.slope, r, acc};
}

std::vector<Moment1D> moments_1d_batch(const Projection& proj, int r_max) {
    if (r_max < 0 || r_max > 8)
        throw std::invalid_argument("1-D moment order must be between 0 and 8");
    int128_t vals[9];
    detail::NullOps ops;
    detail::moments_1d_batch_core(proj, r_max, vals, ops);
    std::vector<Moment1D> out;
    out.reserve(r_max + 1);
    for (int r = 0; r <= r_max; ++r)
        out.push_back(Moment1D{proj.slope, r, vals[r]});
    return out;
}

}  // namespace radmom
