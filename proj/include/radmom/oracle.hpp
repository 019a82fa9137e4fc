#pragma once

#include "radmom/image.hpp"
#include "radmom/moment_set.hpp"

namespace radmom {

// Direct double-loop evaluation of M_pq = sum I(i,j) i^p j^q for all
// p+q <= r_max. Ground truth and benchmark baseline; deliberately plain
// apart from incremental per-pixel powers. Single-threaded by design so
// benchmark comparisons stay fair.
MomentSet oracle_moments(const Image& img, int r_max);

}  // namespace radmom
