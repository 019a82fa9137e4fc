#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "radmom/image.hpp"
#include "radmom/moment_set.hpp"
#include "radmom/opcount.hpp"

namespace radmom {

struct BenchRecord {
    int width = 0;
    int height = 0;
    Method method = Method::naive;
    int order = 4;
    int repeats = 0;
    std::int64_t min_us = 0;
    std::int64_t median_us = 0;
    OpCounts ops;
};

// One moment set by the requested method (0 <= r_max <= 8). drt dispatch:
// the five-projection pipeline at order 4, axis projections below order 2,
// the general solver otherwise.
MomentSet compute_moments(const Image& img, Method method, int r_max);

// Deterministic synthetic image: fixed-seed LCG keyed on the dimensions,
// byte-for-byte reproducible across machines.
Image make_bench_image(int width, int height);

// For each size: one instrumented pass for the tallies, one untimed
// warm-up, then `repeats` timed runs on a monotonic clock (min and median
// recorded). Every repeat's moment set is compared for equality so the
// compiler cannot discard the work. Strictly single-threaded.
std::vector<BenchRecord> bench(const std::vector<std::pair<int, int>>& sizes,
                               Method method, int repeats, int r_max);

// Header `width,height,method,order,repeats,min_us,median_us,mults,adds`,
// one row per record. Optional comment lines are emitted before the
// header, each prefixed with "# ".
void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out,
              const std::vector<std::string>& comments = {});

// The eight benchmark sizes, largest first.
const std::vector<std::pair<int, int>>& default_bench_sizes();

}  // namespace radmom
