#pragma once

#include <stdexcept>

namespace unispecht {

// Bad caller input (mismatched n, out-of-range parameters, malformed literals).
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation exceeded a configured budget (e.g. tabloid count).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic produced an impossible value (non-integer average,
// negative multiplicity).  Always an implementation bug, never user error.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace unispecht
