#ifndef OREPOLY_ERRORS_HPP
#define OREPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orepoly {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (field specs, polynomials, CLI operands).
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Violated mathematical precondition: zero divisor, context mismatch,
// non-etale input where etale is required, and the like.
struct math_error : error {
    explicit math_error(const std::string& msg) : error(msg) {}
};

// A randomized search exhausted its retry budget.
struct retry_error : math_error {
    explicit retry_error(const std::string& msg) : math_error(msg) {}
};

}  // namespace orepoly

#endif
