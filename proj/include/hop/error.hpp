#pragma once

#include <stdexcept>
#include <string>

namespace hop {

/// Bad arguments: wrong parity, out-of-range sizes, malformed types.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction could not produce the structure it promises.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace hop
