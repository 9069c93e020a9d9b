#pragma once

#include <stdexcept>
#include <string>

namespace fixpoint {

/// Malformed or rejected run configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A map or scheme produced a point outside its declared domain.
class DomainViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem hypothesis fails on the given data, e.g. 2δ(b−t0) ≥ 1 (CLI exit code 2).
class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A user-supplied function returned a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fixpoint
