#pragma once

#include <random>
#include <vector>

#include "radmom/image.hpp"

namespace radmom::test {

inline Image random_image(std::mt19937& rng, int max_w, int max_h,
                          int max_val = 255) {
    std::uniform_int_distribution<int> wd(1, max_w), hd(1, max_h),
        vd(0, max_val);
    const int w = wd(rng);
    const int h = hd(rng);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
    for (auto& v : px) v = static_cast<std::uint8_t>(vd(rng));
    return Image(w, h, std::move(px));
}

inline Image single_pixel_image(int w, int h, int i, int j,
                                std::uint8_t value) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h, 0);
    px[static_cast<std::size_t>(j) * w + i] = value;
    return Image(w, h, std::move(px));
}

}  // namespace radmom::test
