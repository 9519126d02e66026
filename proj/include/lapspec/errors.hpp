#pragma once

#include <stdexcept>
#include <string>

namespace lapspec {

/// Base class for all lapspec errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- digraph construction ----
class InvalidWeightError : public Error { using Error::Error; };
class SelfLoopError      : public Error { using Error::Error; };
class DuplicateArcError  : public Error { using Error::Error; };
class BadIndexError      : public Error { using Error::Error; };

// ---- numerics ----
class NoConvergenceError   : public Error { using Error::Error; };
class NotAnEigenvalueError : public Error { using Error::Error; };
class OverflowError        : public Error { using Error::Error; };

// ---- Laplacian / geometry ----
class InvariantViolationError : public Error { using Error::Error; };
class NotConvexError          : public Error { using Error::Error; };
class OutsidePolygonError     : public Error { using Error::Error; };
class ExactModeRequiredError  : public Error { using Error::Error; };

// ---- I/O ----
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column = 0)
        : Error(msg + " (line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : "") + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }
private:
    int line_;
    int column_;
};

class IoError : public Error { using Error::Error; };

} // namespace lapspec
