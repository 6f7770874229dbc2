#pragma once

#include <stdexcept>
#include <string>

namespace spanner_kit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Duplicate points, identical endpoints, NaN coordinates.
struct DegenerateInput : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

// A theorem-level guarantee failed on an input that should satisfy it.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

struct AlreadyArrived : Error {
    using Error::Error;
};

}  // namespace spanner_kit
