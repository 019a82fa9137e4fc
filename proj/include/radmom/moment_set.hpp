#pragma once

#include <vector>

#include "radmom/int128.hpp"

namespace radmom {

struct MomentEntry {
    int p;
    int q;
    int128_t value;
};

// All raw moments M_pq with p+q <= order, stored densely. Entries iterate
// by total order r = p+q ascending, then p descending within an order
// (m00, m10, m01, m20, m11, m02, ...).
class MomentSet {
public:
    explicit MomentSet(int order);

    int order() const { return order_; }
    std::size_t size() const { return values_.size(); }

    int128_t at(int p, int q) const { return values_[index(p, q)]; }
    void set(int p, int q, int128_t v) { values_[index(p, q)] = v; }

    std::vector<MomentEntry> entries() const;

    bool operator==(const MomentSet&) const = default;

private:
    std::size_t index(int p, int q) const;

    int order_;
    std::vector<int128_t> values_;
};

}  // namespace radmom
