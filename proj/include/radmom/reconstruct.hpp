#pragma once

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "radmom/image.hpp"
#include "radmom/moment_set.hpp"
#include "radmom/projection.hpp"

namespace radmom {

// Recovers all 15 raw moments up to 4th order from the five canonical
// projections alone (no access to the source image). Every interior
// division is exact; a nonzero remainder raises internal_error.
MomentSet reconstruct_order4(const std::array<Projection, 5>& projs);

// Convenience: project_all_order4 + reconstruct_order4.
MomentSet drt_moments_order4(const Image& img);

// Central moments are exact rationals; raw moments can exceed what a
// 128-bit numerator/denominator pair survives under the binomial shift,
// so these use arbitrary precision.
using Fraction = boost::multiprecision::cpp_rational;

struct CentralMomentEntry {
    int p;
    int q;
    Fraction value;
};

class CentralMomentSet {
public:
    explicit CentralMomentSet(int order);

    int order() const { return order_; }
    const Fraction& at(int p, int q) const { return values_[index(p, q)]; }
    void set(int p, int q, Fraction v) { values_[index(p, q)] = std::move(v); }

    std::vector<CentralMomentEntry> entries() const;

private:
    std::size_t index(int p, int q) const;

    int order_;
    std::vector<Fraction> values_;
};

// mu_pq about the centroid (M10/M00, M01/M00) by binomial expansion of the
// raw moments. Requires positive total mass.
CentralMomentSet central_moments(const MomentSet& ms);

}  // namespace radmom
