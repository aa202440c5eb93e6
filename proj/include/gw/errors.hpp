#pragma once

#include <stdexcept>
#include <string>

namespace gw {

/// Malformed documents, out-of-range parameters, precondition violations.
/// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A failed internal self-check (e.g. modular rank disagreeing with the
/// exact rank). Always carries a witness in the message. CLI exit code 2.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gw
