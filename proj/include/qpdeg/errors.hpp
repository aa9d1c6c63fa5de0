#pragma once

#include <stdexcept>
#include <string>

namespace qpdeg {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The point (q, p) = (0, 0) is not part of the parameter square.
class OriginExcludedError : public DomainError {
public:
    OriginExcludedError() : DomainError("the point (q, p) = (0, 0) is excluded") {}
};

// Caller broke a documented precondition (e.g. a point that is not on the curve).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Implicit derivative requested where dF/dp vanishes.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A root search found more than one root where exactly one is expected.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (family specs, level pairs).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace qpdeg
