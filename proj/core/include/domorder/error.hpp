#pragma once

#include <stdexcept>
#include <string>

namespace domorder {

/// Malformed textual input (partition strings, graph expressions, graph6).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string & what) : std::invalid_argument("parse error: " + what) {}
};

/// Input is well formed but outside the operation's domain (odd sums, non-graphic sequences, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string & what) : std::domain_error(what) {}
};

/// A configured size cap or enumeration budget was exceeded. Never swallowed: a truncated
/// enumeration would make forcibly-free answers wrong.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string & what) : std::runtime_error("resource limit: " + what) {}
};

} // namespace domorder
