#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radmom {

// Exact-arithmetic postcondition failure (nonzero remainder in an exact
// division, non-integer linear-system solution, accumulator overflow).
// Must never fire on valid inputs.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed input file; offset is the byte position of the failure.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace radmom
