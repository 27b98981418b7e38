#pragma once

#include <stdexcept>
#include <string>

namespace regge {

/// Edge lengths that do not realize a nondegenerate Euclidean simplex.
///
/// When the failure comes from a specific tetrahedron of a complex, `tet()`
/// carries its id and `cayley_menger()` the offending determinant; otherwise
/// `tet()` is -1.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what, int tet = -1, double cayley_menger = 0.0)
        : std::domain_error(what), tet_(tet), cayley_menger_(cayley_menger) {}

    int tet() const noexcept { return tet_; }
    double cayley_menger() const noexcept { return cayley_menger_; }

private:
    int tet_;
    double cayley_menger_;
};

/// Malformed triangulation document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a combinatorial invariant of a closed
/// triangulated 3-manifold.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A routine was called outside its stated precondition (for example the
/// csc-point Hessian at a metric that is not constant scalar curvature).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace regge
