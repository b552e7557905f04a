#ifndef LPA_ERRORS_HPP
#define LPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpa {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (graph files, expressions). Carries a location hint
/// in the message.
class parse_error : public error {
public:
    using error::error;
};

/// Structurally invalid graph data (duplicate ids, dangling endpoints, ...).
class graph_error : public error {
public:
    using error::error;
};

/// A precondition of an algebraic operation was violated.
class domain_error : public error {
public:
    using error::error;
};

} // namespace lpa

#endif
