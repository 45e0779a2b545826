#pragma once

#include <stdexcept>
#include <string>

namespace preradicals {

/// Enumeration would exceed a configured work bound.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible shapes, quivers or fields in an operation.
class shape_error : public std::invalid_argument {
public:
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A lattice-closure or validity precondition failed on user input.
class closure_error : public std::invalid_argument {
public:
    explicit closure_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace preradicals
