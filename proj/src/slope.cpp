#include "radmom/slope.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace radmom {

SlopeRatio::SlopeRatio(int a_in, int b_in) : a(a_in), b(b_in) {
    if (a == 0 && b == 0)
        throw std::invalid_argument("slope ratio 0:0 has no direction");
    const int g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    a /= g;
    b /= g;
}

std::string SlopeRatio::str() const {
    return std::to_string(a) + ":" + std::to_string(b);
}

double SlopeRatio::angle_deg() const {
    return std::atan2(static_cast<double>(b), static_cast<double>(a)) * 180.0 /
           3.14159265358979323846;
}

}  // namespace radmom
