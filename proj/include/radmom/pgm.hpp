#pragma once

#include <iosfwd>
#include <string>

#include "radmom/image.hpp"

namespace radmom {

// P2 (ASCII) and P5 (binary) PGM with '#' comments in the header and
// maxval <= 255. File pixel (column x, row y) maps to I(i=x, j=y).
// Malformed input raises parse_error with the byte offset.
Image read_pgm(std::istream& in);
Image read_pgm(const std::string& path);

void write_pgm(const Image& img, std::ostream& out, bool binary = true);
void write_pgm(const Image& img, const std::string& path, bool binary = true);

}  // namespace radmom
