#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcii {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// galois
class BadDegree : public Error {
  public:
    using Error::Error;
};
class NonPrimitivePolynomial : public Error {
  public:
    using Error::Error;
};
class DivideByZero : public Error {
  public:
    using Error::Error;
};

// linalg
class BadDimensions : public Error {
  public:
    using Error::Error;
};
class FieldMismatch : public Error {
  public:
    using Error::Error;
};
class RankDeficient : public Error {
  public:
    using Error::Error;
};
class Singular : public Error {
  public:
    using Error::Error;
};

// code / codec
class NotNonDecreasing : public Error {
  public:
    using Error::Error;
};
class OutOfRange : public Error {
  public:
    using Error::Error;
};
class LengthExceedsField : public Error {
  public:
    using Error::Error;
};
class ProfileTooTall : public Error {
  public:
    using Error::Error;
};
class ShapeMismatch : public Error {
  public:
    using Error::Error;
};
class InvalidPlacement : public Error {
  public:
    using Error::Error;
};

// oracle
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

/// Text input error; line/col are 1-based, 0 when not applicable.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t col = 0)
        : Error(locate(what, line, col)), line_(line), col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

  private:
    static std::string locate(const std::string& what, std::size_t line, std::size_t col) {
        if (line == 0) return what;
        return what + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
    }

    std::size_t line_;
    std::size_t col_;
};

}  // namespace gcii
