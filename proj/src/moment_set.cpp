#include "radmom/moment_set.hpp"

#include <stdexcept>
#include <string>

namespace radmom {

MomentSet::MomentSet(int order) : order_(order) {
    if (order < 0)
        throw std::invalid_argument("moment order must be non-negative");
    values_.assign(static_cast<std::size_t>(order + 1) * (order + 2) / 2, 0);
}

std::size_t MomentSet::index(int p, int q) const {
    if (p < 0 || q < 0 || p + q > order_)
        throw std::out_of_range("no moment (" + std::to_string(p) + "," +
                                std::to_string(q) + ") in an order-" +
                                std::to_string(order_) + " set");
    const int r = p + q;
    return static_cast<std::size_t>(r) * (r + 1) / 2 + q;
}

std::vector<MomentEntry> MomentSet::entries() const {
    std::vector<MomentEntry> out;
    out.reserve(values_.size());
    for (int r = 0; r <= order_; ++r)
        for (int p = r; p >= 0; --p) out.push_back({p, r - p, at(p, r - p)});
    return out;
}

}  // namespace radmom
