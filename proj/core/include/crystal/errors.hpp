#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data (bad JSON, out-of-range indices, non-group tables).
struct format_error : error {
    using error::error;
};

// Mismatched ambient dimensions between operands.
struct dimension_error : format_error {
    using format_error::format_error;
};

// A subspace containment precondition failed (e.g. W not inside V).
struct containment_error : format_error {
    using format_error::format_error;
};

// A declared algebraic axiom does not hold on the given data.
struct axiom_error : error {
    using error::error;
};

// A proved structural law failed on validated input; indicates either a
// corrupted input or a bug, and must surface loudly.
struct theorem_error : axiom_error {
    using axiom_error::axiom_error;
};

// A configured budget (tensor size, window growth, closure cap) was exceeded.
struct resource_error : error {
    using error::error;
};

} // namespace crystal
