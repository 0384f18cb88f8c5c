#pragma once

#include <stdexcept>
#include <string>

namespace linkscreen {

// Bad caller-supplied data: non-positive lengths, polygon violations,
// out-of-band diagonals, malformed assignments. CLI maps this to exit 2.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Filesystem trouble while writing outputs. CLI maps this to exit 3.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace linkscreen
