#include "radmom/opcount.hpp"

#include "pipeline.hpp"

namespace radmom {

const char* method_name(Method m) {
    return m == Method::naive ? "naive" : "drt";
}

OpCounts count_ops(const Image& img, Method method, int r_max) {
    detail::TallyOps ops;
    if (method == Method::naive) {
        detail::oracle_core(img, r_max, ops);
    } else if (r_max == 4) {
        detail::drt_order4_core(img, ops);
    } else if (r_max >= 2) {
        detail::moments_general_core(img, r_max, ops);
    } else {
        // Orders 0 and 1 need the axis projections only.
        const auto h = detail::project_core(img, SlopeRatio{1, 0}, ops);
        int128_t vals[9];
        detail::moments_1d_batch_core(h, r_max, vals, ops);
        if (r_max == 1) {
            const auto v = detail::project_core(img, SlopeRatio{0, 1}, ops);
            detail::moments_1d_batch_core(v, r_max, vals, ops);
        }
    }
    return ops.counts;
}

}  // namespace radmom
