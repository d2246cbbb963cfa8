#pragma once

#include <stdexcept>
#include <string>

namespace arrovian {

/// Malformed textual input (domain files). Carries a 1-based line number
/// when the offending line is known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace arrovian
