#ifndef QVL_ERRORS_HPP
#define QVL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qvl {

// Bad user input: malformed vectors, index mismatches, unknown presets.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// Quiver outside the supported finite/affine/Jordan classes.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& m) : std::runtime_error(m) {}
};

// Stability parameter lying on a GIT wall.
struct stability_error : std::runtime_error {
    explicit stability_error(const std::string& m) : std::runtime_error(m) {}
};

// Enumeration exceeded the configured node budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& m) : std::runtime_error(m) {}
};

// Invariant violation inside the library; never expected on valid input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

} // namespace qvl

#endif
