#pragma once

#include <stdexcept>
#include <string>

namespace pucorrect {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A dataset is missing one of the two sample classes (labeled / unlabeled),
/// or a positive/negative score list given to an oracle is empty.
class EmptyClassError : public Error {
public:
    using Error::Error;
};

/// A score is NaN or infinite.
class NonFiniteScoreError : public Error {
public:
    using Error::Error;
};

/// beta - alpha is below the minimum separation required by the
/// correction formulas (which divide by beta - alpha).
class DegenerateSeparationError : public Error {
public:
    using Error::Error;
};

/// Precision is requested at a point where it is undefined
/// (fpr_pu == 0, or rho_pu == 1).
class UndefinedPrecisionError : public Error {
public:
    using Error::Error;
};

/// The labeled fraction c is required but was not provided.
class MissingLabeledFractionError : public Error {
public:
    using Error::Error;
};

/// Indirect curve recovery filtered out every input point.
class EmptyRecoveredCurveError : public Error {
public:
    using Error::Error;
};

/// Curve points are not sorted by x, so the step integral is undefined.
class UnsortedCurveError : public Error {
public:
    using Error::Error;
};

/// The sample pool cannot supply the requested labeled/unlabeled split.
class InsufficientPoolError : public Error {
public:
    using Error::Error;
};

/// A file could not be parsed; the message names the offending line.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its documented domain.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

} // namespace pucorrect
