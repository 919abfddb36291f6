#ifndef CWB_ERRORS_HPP
#define CWB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cwb {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input: quiver files, words, CLI flags.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A division in the Laurent ring left a remainder.  In the mutation path this
// falsifies the Laurent phenomenon, so it is never caught and retried.
struct NonExactDivision : Error {
    explicit NonExactDivision(const std::string& msg) : Error(msg) {}
};

// An internal consistency check failed; indicates an engine bug.
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

// A lookup against the object inventory failed, e.g. because the inventory
// depth is too small for the requested denominator vector.
struct ResolutionError : Error {
    explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

// Operation requested on a quiver class it does not support.
struct UnsupportedQuiver : Error {
    explicit UnsupportedQuiver(const std::string& msg) : Error(msg) {}
};

}  // namespace cwb

#endif
