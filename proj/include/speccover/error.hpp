#ifndef SPECCOVER_ERROR_HPP
#define SPECCOVER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace speccover {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A matrix failed one of the structural invariants of its type.
///
/// Row/column indices are 1-based, matching the clause/element numbering
/// used in file formats and diagnostics. A value of 0 means "not applicable".
class ValidationError : public Error {
public:
    enum class Kind {
        shape,             // ragged or empty input
        bad_entry,         // CNF cell outside {-1, 0, +1}, or 0/1 cell outside {0, 1}
        empty_clause,      // all-zero CNF row
        unused_variable,   // all-zero CNF column
        overlap,           // element in both components of a pair
        empty_pair,        // both components of a pair are empty
        uncovered_element  // element in no component at all
    };

    ValidationError(Kind kind, std::size_t row, std::size_t col, const std::string& what)
        : Error(what), kind_(kind), row_(row), col_(col) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    Kind kind_;
    std::size_t row_;
    std::size_t col_;
};

/// Two operands that must agree in size do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration was requested beyond the oracle guard.
class TooLargeError : public Error {
public:
    TooLargeError(std::size_t n, std::size_t limit)
        : Error("instance too large for exhaustive enumeration: n=" + std::to_string(n) +
                " exceeds limit " + std::to_string(limit)),
          n_(n), limit_(limit) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t n_;
    std::size_t limit_;
};

/// Text input could not be parsed.
///
/// `index()` is the 1-based line number for syntax and range errors, and the
/// 1-based clause number for tautologies. 0 when unknown.
class ParseError : public Error {
public:
    enum class Kind { syntax, tautology, range };

    ParseError(Kind kind, std::size_t index, const std::string& what)
        : Error(what), kind_(kind), index_(index) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t index() const noexcept { return index_; }

private:
    Kind kind_;
    std::size_t index_;
};

}  // namespace speccover

#endif
