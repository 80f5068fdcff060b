#pragma once

#include <stdexcept>
#include <string>

namespace chebzsig {

// Raised when a division that number theory guarantees to be exact leaves a
// remainder.  Seeing this exception means a bug, not a bad input.
struct integrality_violation : std::logic_error {
    explicit integrality_violation(const std::string& what)
        : std::logic_error(what) {}
};

// Raised by the polynomial square root when the input is not a perfect
// square in Z[x].
struct not_a_square : std::logic_error {
    explicit not_a_square(const std::string& what) : std::logic_error(what) {}
};

// Raised when a computation arrives at a state the underlying theorems rule
// out.  Like integrality_violation this signals an implementation bug (or a
// counterexample, which would be rather more interesting).
struct theorem_violation : std::logic_error {
    explicit theorem_violation(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace chebzsig
