#pragma once

#include <stdexcept>
#include <string>

namespace procstar {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operator index is out of range for the dimension it is applied at.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Malformed input data (bad JSON, unknown ids, inconsistent tables).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

/// Expression or document could not be parsed.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace procstar
