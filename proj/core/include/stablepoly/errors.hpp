#ifndef STABLEPOLY_ERRORS_HPP_
#define STABLEPOLY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace stablepoly {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ContextMismatch : public Error {
  public:
    explicit ContextMismatch(const std::string& msg = "operands belong to different field contexts")
        : Error(msg) {}
};

class DivisionByZero : public Error {
  public:
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

class ReducibleModulus : public Error {
  public:
    explicit ReducibleModulus(const std::string& msg = "modulus is reducible") : Error(msg) {}
};

class DegreeMismatch : public Error {
  public:
    explicit DegreeMismatch(const std::string& msg = "modulus has wrong degree") : Error(msg) {}
};

class NotQuadratic : public Error {
  public:
    explicit NotQuadratic(const std::string& msg = "leading coefficient of quadratic is zero")
        : Error(msg) {}
};

class ConstantPolynomial : public Error {
  public:
    explicit ConstantPolynomial(const std::string& msg = "polynomial must have degree >= 1")
        : Error(msg) {}
};

class NotMonic : public Error {
  public:
    explicit NotMonic(const std::string& msg = "polynomial must be monic") : Error(msg) {}
};

class IterationTooDeep : public Error {
  public:
    explicit IterationTooDeep(const std::string& msg = "iteration depth exceeds guard") : Error(msg) {}
};

class SweepTooLarge : public Error {
  public:
    explicit SweepTooLarge(const std::string& msg = "field too large for exhaustive sweep")
        : Error(msg) {}
};

class ReducibleOuter : public Error {
  public:
    explicit ReducibleOuter(const std::string& msg = "outer polynomial is reducible") : Error(msg) {}
};

class PreconditionFailed : public Error {
  public:
    explicit PreconditionFailed(const std::string& msg = "precondition failed") : Error(msg) {}
};

// Malformed textual input (polynomial notation, hex strings, table files).
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& msg = "parse error") : Error(msg) {}
};

}  // namespace stablepoly

#endif  // STABLEPOLY_ERRORS_HPP_
