#include "radmom/reconstruct.hpp"

#include <stdexcept>

#include "pipeline.hpp"

namespace radmom {

MomentSet reconstruct_order4(const std::array<Projection, 5>& projs) {
    detail::NullOps ops;
    return detail::reconstruct_order4_core(projs, ops);
}

MomentSet drt_moments_order4(const Image& img) {
    detail::NullOps ops;
    return detail::drt_order4_core(img, ops);
}

CentralMomentSet::CentralMomentSet(int order) : order_(order) {
    values_.assign(static_cast<std::size_t>(order + 1) * (order + 2) / 2,
                   Fraction(0));
}

std::size_t CentralMomentSet::index(int p, int q) const {
    if (p < 0 || q < 0 || p + q > order_)
        throw std::out_of_range("no central moment (" + std::to_string(p) +
                                "," + std::to_string(q) + ") in an order-" +
                                std::to_string(order_) + " set");
    const int r = p + q;
    return static_cast<std::size_t>(r) * (r + 1) / 2 + q;
}

std::vector<CentralMomentEntry> CentralMomentSet::entries() const {
    std::vector<CentralMomentEntry> out;
    out.reserve(values_.size());
    for (int r = 0; r <= order_; ++r)
        for (int p = r; p >= 0; --p) out.push_back({p, r - p, at(p, r - p)});
    return out;
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int to_big(int128_t v) {
    return cpp_int(v);
}

std::int64_t binom(int n, int k) {
    std::int64_t c = 1;
    for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
    return c;
}

}  // namespace

CentralMomentSet central_moments(const MomentSet& ms) {
    if (ms.order() < 1)
        throw std::invalid_argument("central moments need the order-1 raw "
                                    "moments to locate the centroid");
    if (ms.at(0, 0) <= 0)
        throw std::domain_error("empty image: cannot center moments on zero mass");

    const int order = ms.order();
    const Fraction xbar(to_big(ms.at(1, 0)), to_big(ms.at(0, 0)));
    const Fraction ybar(to_big(ms.at(0, 1)), to_big(ms.at(0, 0)));

    // Powers of the negated centroid, reused across all (p, q).
    std::vector<Fraction> nx(order + 1, Fraction(1));
    std::vector<Fraction> ny(order + 1, Fraction(1));
    for (int d = 1; d <= order; ++d) {
        nx[d] = nx[d - 1] * -xbar;
        ny[d] = ny[d - 1] * -ybar;
    }

    CentralMomentSet out(order);
    for (int p = 0; p <= order; ++p) {
        for (int q = 0; p + q <= order; ++q) {
            Fraction mu(0);
            for (int s = 0; s <= p; ++s)
                for (int t = 0; t <= q; ++t)
                    mu += Fraction(binom(p, s) * binom(q, t)) * nx[p - s] *
                          ny[q - t] * Fraction(to_big(ms.at(s, t)));
            out.set(p, q, std::move(mu));
        }
    }

    if (out.at(0, 0) != Fraction(to_big(ms.at(0, 0))) ||
        (order >= 1 && (out.at(1, 0) != 0 || out.at(0, 1) != 0)))
        throw internal_error("central moment identities violated");
    return out;
}

}  // namespace radmom
