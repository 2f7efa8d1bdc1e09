#pragma once

#include <stdexcept>
#include <string>

namespace wlp {

/// Caller mixed incompatible operands (e.g. elements of different groups).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration exceeded the configured element cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario or input data failed validation.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bounded search ran out of room before it could decide.
/// Distinct from a definite negative answer.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction precondition (disjointness, nesting) failed.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wlp
