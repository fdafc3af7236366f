#ifndef LEFSCHETZ_ERRORS_HPP
#define LEFSCHETZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Input that violates a format rule or a value invariant (bad fraction,
/// repeated vertex, weights not summing to one, ...).
class MalformedInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A subdivision whose geometry is inconsistent with its base complex.
class InvalidSubdivision : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Vertex assignment that does not carry simplices to simplices.
class InvalidMap : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An argument outside the domain of an operation, e.g. a complex that is
/// not a subcomplex of the required ambient complex.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A documented precondition of an operation was not met by the caller.
class PreconditionViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// An internal algebraic identity failed (a chain map that is not one, a
/// cycle whose image is not a cycle). Never recovered from.
class ConsistencyFailure : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Exhaustive enumeration refused because the input is too large.
class CombinatorialLimit : public std::length_error {
  public:
    using std::length_error::length_error;
};

}  // namespace lefschetz

#endif
