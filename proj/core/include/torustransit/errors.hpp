#pragma once

#include <stdexcept>
#include <string>

namespace torustransit {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes do not match the operation.
struct DimensionError : Error {
    using Error::Error;
};

/// A value violates an operation precondition.
struct InvalidInput : Error {
    using Error::Error;
};

/// A square matrix required to be nonsingular has determinant zero.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// A supplied basis is linearly dependent.
struct RankError : Error {
    using Error::Error;
};

/// A subspace claimed to be invariant is not mapped into itself.
struct InvarianceError : Error {
    using Error::Error;
};

/// A point lies on the measure-zero set where fiber preimages hit a
/// breakpoint and the one-sided slopes disagree.
struct DegeneratePointError : Error {
    using Error::Error;
};

/// The fiber map reverses orientation or fails to expand; the slab and
/// surface machinery only supports fiber eigenvalue >= 2.
struct UnsupportedOrientationError : Error {
    using Error::Error;
};

}  // namespace torustransit
