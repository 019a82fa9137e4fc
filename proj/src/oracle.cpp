#include "radmom/oracle.hpp"

#include "pipeline.hpp"

namespace radmom {

MomentSet oracle_moments(const Image& img, int r_max) {
    detail::NullOps ops;
    return detail::oracle_core(img, r_max, ops);
}

}  // namespace radmom
