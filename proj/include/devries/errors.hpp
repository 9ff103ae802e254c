#pragma once

#include <stdexcept>
#include <string>

namespace devries {

/// Malformed textual input (interval syntax, step functions, algebra files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was asked to run beyond its exhaustively checkable range.
struct ScaleError : std::runtime_error {
    explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace devries
