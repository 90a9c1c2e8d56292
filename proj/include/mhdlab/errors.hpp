#pragma once

#include <stdexcept>
#include <string>

namespace mhdlab {

// Error taxonomy shared by all modules. Every condition that callers are
// expected to distinguish gets its own type; everything derives from Error
// so the CLI can map categories to exit codes.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Domain/precondition violations (exit code 3 at the CLI).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

class ZeroPointError : public DomainError {
public:
    explicit ZeroPointError(const std::string& msg = "evaluation at the origin") : DomainError(msg) {}
};

class ZeroRadiusError : public DomainError {
public:
    explicit ZeroRadiusError(const std::string& msg = "radius must be positive") : DomainError(msg) {}
};

class AxisSingularityError : public DomainError {
public:
    explicit AxisSingularityError(const std::string& msg = "point too close to the polar axis") : DomainError(msg) {}
};

class StencilHitsOriginError : public DomainError {
public:
    explicit StencilHitsOriginError(const std::string& msg = "finite-difference stencil touches the origin") : DomainError(msg) {}
};

class MissingPressureError : public DomainError {
public:
    explicit MissingPressureError(const std::string& msg = "field triple has no pressure component") : DomainError(msg) {}
};

class QuadratureMismatchError : public DomainError {
public:
    explicit QuadratureMismatchError(const std::string& msg = "quadrature radius does not match requested radius") : DomainError(msg) {}
};

class TestFieldNotDivergenceFreeError : public DomainError {
public:
    explicit TestFieldNotDivergenceFreeError(const std::string& msg = "test field is not divergence-free") : DomainError(msg) {}
};

class NonPositiveValuesError : public DomainError {
public:
    explicit NonPositiveValuesError(const std::string& msg = "field vanishes on a sampling sphere") : DomainError(msg) {}
};

class DomainExceededError : public DomainError {
public:
    explicit DomainExceededError(const std::string& msg = "evaluation point outside the source domain") : DomainError(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Solver failures (exit code 5 at the CLI).
class SolverFailure : public Error {
public:
    explicit SolverFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace mhdlab
