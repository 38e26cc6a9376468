#pragma once

#include <stdexcept>
#include <string>

namespace aritylab {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed structure file. Carries the 1-based line/column of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Semantically invalid input: out-of-range element, non-invariant relation,
/// missing symbol, unsupported parameter.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured cap or budget would be exceeded. The message states the
/// required budget so the caller can raise the cap deliberately.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace aritylab
