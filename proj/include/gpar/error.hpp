#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpar {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A caller broke an operation's precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

/// The reframe oracle refused to materialize a database beyond its cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& required, const std::string& cap)
        : Error("transaction database needs " + required + " transactions, cap is " + cap),
          required_(required) {}

    const std::string& required() const { return required_; }

private:
    std::string required_;
};

}  // namespace gpar
