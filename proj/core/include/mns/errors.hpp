#pragma once

#include <stdexcept>
#include <string>

namespace mns {

/// Input that could not be parsed or has malformed shape.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands whose dimensions do not match the operation.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Structurally invalid value (e.g. a digit outside the digit set).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix with zero determinant where an inverse is required.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operation that requires every eigenvalue modulus to exceed one.
struct NotDilationError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operation restricted to matrices commuting with their transpose.
struct NotNormalError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Digit construction failed to produce a complete residue system.
struct ResidueSystemError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A division orbit exceeded its step budget; indicates a bounds bug.
struct OrbitBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independently computed results disagree; never expected.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Lattice transport produced a non-integer or non-real matrix.
struct TransportError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace mns
