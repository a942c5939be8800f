#ifndef SPTRI_ERRORS_HPP
#define SPTRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sptri {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that violates a structural requirement (duplicate vertices in a
/// face, unparseable file, ...).
class MalformedInputError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A face passed to star/link is not a face of the complex.
class FaceNotFoundError : public Error {
public:
    using Error::Error;
};

/// A cone apex (or fresh label) collides with an existing vertex.
class VertexCollisionError : public Error {
public:
    using Error::Error;
};

/// Some ridge lies in three or more facets.
class NotPseudomanifoldError : public Error {
public:
    using Error::Error;
};

/// A construction-time invariant of one of the builders failed.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// The identification map of a diamond-connected sum is not a simplicial
/// isomorphism of the two star boundaries.
class GluingError : public Error {
public:
    using Error::Error;
};

/// A handle addition is illegal (common-neighbor violation, or the edge
/// lies in a protected region).
class HandleError : public Error {
public:
    using Error::Error;
};

/// A facet order fails the shelling interval condition.  Carries the
/// 0-based step at which the order breaks.
class ShellingError : public Error {
public:
    ShellingError(const std::string& what, int step) : Error(what), step_(step) {}
    int step() const { return step_; }

private:
    int step_ = -1;
};

/// A cycle/antipodality criterion check failed.
class CriterionError : public Error {
public:
    using Error::Error;
};

/// A backtracking search exceeded its node budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A group closure exceeded its cap.
class CapError : public Error {
public:
    using Error::Error;
};

} // namespace sptri

#endif
