#ifndef MLREACH_ERRORS_HPP
#define MLREACH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mlreach {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Set intersection of two intervals (or boxes) is empty.
class EmptyIntersection : public Error {
  public:
    explicit EmptyIntersection(const std::string& msg) : Error(msg) {}
};

// Interval division where the denominator contains zero.
class DivisionByZeroInterval : public Error {
  public:
    explicit DivisionByZeroInterval(const std::string& msg) : Error(msg) {}
};

// inflate_sym called with a negative radius.
class NegativeInflation : public Error {
  public:
    explicit NegativeInflation(const std::string& msg) : Error(msg) {}
};

// Vector/matrix dimensions do not conform.
class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// A series/iteration budget was exhausted before the requested certificate
// could be produced.
class BudgetExceeded : public Error {
  public:
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Midpoint matrix has conjugate-complex eigenvalues; the real similarity
// transform used here does not apply.
class ComplexEigenvalues : public Error {
  public:
    explicit ComplexEigenvalues(const std::string& msg) : Error(msg) {}
};

// Eigenvector matrix too ill-conditioned to be useful as a transform.
class NearDefective : public Error {
  public:
    explicit NearDefective(const std::string& msg) : Error(msg) {}
};

// Verified inversion failed: the residual norm bound reached one.
class SingularOrIllConditioned : public Error {
  public:
    explicit SingularOrIllConditioned(const std::string& msg) : Error(msg) {}
};

// A user-supplied evaluation rule hit an interval domain error.
class EvaluationDomainError : public Error {
  public:
    explicit EvaluationDomainError(const std::string& msg) : Error(msg) {}
};

// (A, b) pair is not controllable; pole placement impossible.
class Uncontrollable : public Error {
  public:
    explicit Uncontrollable(const std::string& msg) : Error(msg) {}
};

// An initial-state component contains zero; the enclosure iteration divides
// by it. Bisect the initial box at zero and simulate the parts separately.
class ZeroCrossingInitialState : public Error {
  public:
    explicit ZeroCrossingInitialState(const std::string& msg) : Error(msg) {}
};

// The enclosure iteration did not reach the subset stopping condition.
class NotConverged : public Error {
  public:
    explicit NotConverged(const std::string& msg, int slice = -1)
        : Error(msg), slice_index(slice) {}
    int slice_index; // offending time slice, -1 if not slice-related
};

// Evaluation time outside the enclosure's validity horizon.
class HorizonExceeded : public Error {
  public:
    explicit HorizonExceeded(const std::string& msg) : Error(msg) {}
};

// Attempt to evaluate an enclosure whose iteration never converged.
class NotConvergedEnclosure : public Error {
  public:
    explicit NotConvergedEnclosure(const std::string& msg) : Error(msg) {}
};

// Non-verified simulator detected divergence.
class StepTooLarge : public Error {
  public:
    explicit StepTooLarge(const std::string& msg) : Error(msg) {}
};

// jwI - A singular at the requested frequency.
class SingularAtFrequency : public Error {
  public:
    explicit SingularAtFrequency(const std::string& msg) : Error(msg) {}
};

} // namespace mlreach

#endif
