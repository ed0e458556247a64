#pragma once

#include <stdexcept>

namespace drkit {

// A configured bound was exceeded; expected and reportable, not a bug.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A recursion frame fell short of its capacity f_i. Cannot happen for
// admissible parameters; guards solver bugs and hand-rolled overrides.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace drkit
