#pragma once

#include <stdexcept>
#include <string>

namespace cosetdht {

// Bad user input (CLI maps these to exit code 2).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RankDeficient : InputError {
    using InputError::InputError;
};

struct LengthMismatch : InputError {
    using InputError::InputError;
};

struct UnknownCode : InputError {
    using InputError::InputError;
};

struct SyndromeSpaceTooLarge : InputError {
    using InputError::InputError;
};

struct OutOfRange : InputError {
    using InputError::InputError;
};

struct Infeasible : InputError {
    using InputError::InputError;
};

struct TooLarge : InputError {
    using InputError::InputError;
};

struct DegenerateP0 : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_, const std::string& source = "")
        : InputError((source.empty() ? std::string() : source + ": ") + "line " +
                     std::to_string(line_) + ", column " + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

// Broken internal invariant (CLI maps these to exit code 3).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cosetdht
