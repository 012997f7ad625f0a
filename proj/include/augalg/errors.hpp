#pragma once

#include <stdexcept>
#include <string>

namespace augalg {

/// Input violates the algebra axioms (associativity, unit, augmentation).
struct AxiomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A truncation cutoff is below what the request needs.
struct CutoffTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input (bad JSON, inhomogeneous relation, ...).
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Algorithm preconditions not met (e.g. the algebra is not local).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace augalg
