#ifndef IMPERF_ERRORS_HPP
#define IMPERF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace imperf {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& m) : Error(m) {}
};

struct UnknownVariable : Error {
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable: " + name) {}
};

struct UnknownIdentifier : Error {
  explicit UnknownIdentifier(const std::string& name)
      : Error("unknown identifier: " + name) {}
};

struct MixedFields : Error {
  MixedFields() : Error("elements do not live over a common field presentation") {}
};

struct NotAPthPower : Error {
  explicit NotAPthPower(const std::string& m = "element is not a p-th power")
      : Error(m) {}
};

struct NotPIndependent : Error {
  explicit NotPIndependent(const std::string& m = "family is not p-independent")
      : Error(m) {}
};

struct ZeroDivisor : Error {
  ZeroDivisor() : Error("division by a zero family element") {}
};

struct NonPrimeCharacteristic : Error {
  explicit NonPrimeCharacteristic(const std::string& m)
      : Error("non-prime characteristic: " + m) {}
};

struct BadCharacteristic : Error {
  explicit BadCharacteristic(const std::string& m) : Error(m) {}
};

struct ZeroLeadingScalar : Error {
  ZeroLeadingScalar() : Error("leading scalar t1 must be nonzero") {}
};

struct BadIndex : Error {
  explicit BadIndex(const std::string& m) : Error(m) {}
};

struct AllZero : Error {
  AllZero() : Error("all coefficients are zero") {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error(m) {}
};

struct PointNotOnSurface : Error {
  PointNotOnSurface() : Error("point does not satisfy the defining equation") {}
};

struct SingularPoint : Error {
  SingularPoint() : Error("local ring at the point is not regular") {}
};

struct NotRational : Error {
  NotRational() : Error("point is not rational over the ground field") {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(m) {}
};

// Parse errors carry a 1-based source position.
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(const std::string& m, int line_, int column_)
      : Error("syntax error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + m),
        line(line_),
        column(column_) {}
};

}  // namespace imperf

#endif
