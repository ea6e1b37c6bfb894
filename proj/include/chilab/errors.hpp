#pragma once

#include <stdexcept>
#include <string>

namespace chilab {

// Division by an exactly-zero value (rational, golden, or tower).
struct zero_division_error : std::domain_error {
    explicit zero_division_error(const std::string& what) : std::domain_error(what) {}
};

// Arithmetic between tower elements whose radicands cannot be reconciled.
struct radicand_mismatch_error : std::domain_error {
    explicit radicand_mismatch_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace chilab
