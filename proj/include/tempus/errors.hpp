#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempus {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyScaleError : public Error {
public:
    EmptyScaleError() : Error("time scale must contain at least one piece") {}
};

class NonFiniteError : public Error {
public:
    explicit NonFiniteError(double v)
        : Error("non-finite endpoint " + std::to_string(v)) {}
};

class InvalidPieceError : public Error {
public:
    InvalidPieceError(double l, double r)
        : Error("piece left " + std::to_string(l) + " exceeds right "
                + std::to_string(r)) {}
};

class NotInScaleError : public Error {
public:
    explicit NotInScaleError(double t)
        : Error("point " + std::to_string(t) + " is not in the time scale") {}
};

class ReversedBoundsError : public Error {
public:
    ReversedBoundsError(double a, double b)
        : Error("reversed bounds: a=" + std::to_string(a)
                + " > b=" + std::to_string(b)) {}
};

class InvalidGeneratorError : public Error {
public:
    using Error::Error;
};

class BoundaryDerivativeError : public Error {
public:
    explicit BoundaryDerivativeError(double t)
        : Error("delta derivative undefined at " + std::to_string(t)
                + " (isolated maximum, no limit direction)") {}
};

class QuadratureFailureError : public Error {
public:
    QuadratureFailureError()
        : Error("adaptive quadrature exceeded max_depth without meeting "
                "tolerance") {}
};

class SingularTermError : public Error {
public:
    explicit SingularTermError(double s)
        : Error("singular kernel term at scattered point "
                + std::to_string(s)
                + " (sigma(s) = t with alpha < 1); rerun with the "
                  "zero-power convention to drop it") {}
};

class NonPositiveArgumentError : public Error {
public:
    explicit NonPositiveArgumentError(double x)
        : Error("gamma requires a positive argument, got "
                + std::to_string(x)) {}
};

// Expression parsing: offset is the byte position of the first bad token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : Error("syntax error at offset " + std::to_string(offset)
                + ": expected " + expected),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnknownFunctionError : public Error {
public:
    UnknownFunctionError(std::size_t offset, const std::string& name)
        : Error("unknown function '" + name + "' at offset "
                + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class EvalError : public Error {
public:
    EvalError(std::size_t offset, const std::string& what)
        : Error("evaluation error at offset " + std::to_string(offset) + ": "
                + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace tempus
