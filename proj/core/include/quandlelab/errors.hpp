#pragma once

#include <stdexcept>
#include <string>

namespace ql {

// Bad user input (unknown name, malformed file, violated precondition).
// CLI exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap was hit (max cosets, basis size, SNF fill).
// CLI exit code 3.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem-guaranteed internal check failed; indicates a bug, not a
// mathematical outcome. CLI exit code 4.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Checked int64 arithmetic overflowed; callers retry on big integers.
struct OverflowError : std::overflow_error {
    OverflowError() : std::overflow_error("int64 overflow") {}
};

} // namespace ql
