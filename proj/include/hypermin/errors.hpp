#pragma once

#include <stdexcept>

namespace hypermin {

/// Raised when a requested computation exceeds a documented resource cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hypermin
