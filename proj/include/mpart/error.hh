#pragma once

#include <stdexcept>
#include <string>

namespace mpart {

// Malformed input or a violated precondition. The CLI maps it to exit code 2.
class ValidationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A parse failure carrying the offending 1-based line number (0 when unknown).
class ParseError : public ValidationError
{
public:
    ParseError(std::size_t line, const std::string & what) :
        ValidationError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line)
    {
    }

    auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

// A configured cap (candidate maps, search nodes, wall-clock) was hit. CLI exit code 3.
class ResourceLimitError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

}
