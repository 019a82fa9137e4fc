#pragma once

#include <string>

namespace radmom {

// Projection direction as an integer ratio a:b, defining the line index
// k = a*i + b*j. Stored in lowest terms; sign is preserved as given.
struct SlopeRatio {
    int a;  // horizontal coefficient
    int b;  // vertical coefficient

    SlopeRatio(int a_in, int b_in);

    bool operator==(const SlopeRatio&) const = default;

    // True when the two ratios describe the same line direction,
    // i.e. one is the other or its negation.
    bool direction_equal(const SlopeRatio& o) const {
        return (a == o.a && b == o.b) || (a == -o.a && b == -o.b);
    }

    std::string str() const;  // "1:2", "-1:1", ...

    // Display-only angle of the projection direction, degrees. Never used
    // in any computation.
    double angle_deg() const;
};

}  // namespace radmom
