#pragma once

#include <stdexcept>
#include <string>

namespace bdecomp {

/// Raised by exact elimination when a matrix has no inverse.
class SingularMatrixError : public std::domain_error {
public:
    SingularMatrixError() : std::domain_error("singular") {}
};

/// Adaptive quadrature gave up before reaching the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// An identity that must hold by construction did not (e.g. a repeated
/// eigenvalue where the spectrum is known to be simple).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace bdecomp
