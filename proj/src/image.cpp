#include "radmom/image.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "radmom/int128.hpp"

namespace radmom {

namespace {

// 255*M*N*(M+2N)^4 < 2^127 guarantees every intermediate of the 4th-order
// pipeline fits a signed 128-bit integer (the 1:2 projection has the widest
// index range). Comfortably true up to 8192x8192.
bool order4_bound_ok(int w, int h) {
    uint128_t x = 255;
    const uint128_t factors[] = {static_cast<uint128_t>(w),
                                 static_cast<uint128_t>(h)};
    for (uint128_t f : factors)
        if (__builtin_mul_overflow(x, f, &x)) return false;
    const uint128_t span = static_cast<uint128_t>(w) + 2 * static_cast<uint128_t>(h);
    for (int t = 0; t < 4; ++t)
        if (__builtin_mul_overflow(x, span, &x)) return false;
    return x < (static_cast<uint128_t>(1) << 127);
}

}  // namespace

Image::Image(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" +
                                    std::to_string(height));
    const auto expected =
        static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
    if (pixels_.size() != expected)
        throw std::invalid_argument(
            "pixel buffer length mismatch: expected " + std::to_string(expected) +
            ", got " + std::to_string(pixels_.size()));
    if (!order4_bound_ok(width, height))
        throw std::invalid_argument(
            "image too large for exact 128-bit 4th-order moments");
}

std::uint64_t Image::mass() const {
    std::uint64_t total = 0;
    for (std::uint8_t v : pixels_) total += v;
    return total;
}

Image image_from_pixels(int width, int height, std::vector<std::uint8_t> data) {
    return Image(width, height, std::move(data));
}

}  // namespace radmom
