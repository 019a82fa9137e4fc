#pragma once

#include <cstdint>
#include <vector>

namespace radmom {

// Immutable 8-bit grayscale image. i is the horizontal index (column,
// range [0, width)), j the vertical index (row, range [0, height));
// pixel (i, j) lives at pixels[j*width + i].
class Image {
public:
    Image(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint8_t at(int i, int j) const {
        return pixels_[static_cast<std::size_t>(j) * width_ + i];
    }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    // Sum of all pixel values.
    std::uint64_t mass() const;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

Image image_from_pixels(int width, int height, std::vector<std::uint8_t> data);

}  // namespace radmom
