#pragma once

#include <stdexcept>
#include <string>

namespace foci {

// Error taxonomy shared by all modules.  The CLI maps ValidationError and its
// subclasses to exit code 2 and Unresolvable to exit code 3.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

// Hermitian form (1-w)V + (1-conj(w))V^T is degenerate at the requested root
// of unity, i.e. w is a root of the Alexander polynomial on the unit circle.
class SingularForm : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class UnknownKnot : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NotAHomologySphere : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NotAdmissible : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NonUnimodular : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

// Plane quotient is not a pillowcase (e.g. a slanted plane whose image in the
// character variety is a cylinder).
class NotInvariant : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class InvalidParams : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

// A curve/plane incidence that the exact intersection calculus refuses to
// count: tangency, vertex on a plane, or contact with the branch locus.
// Carries the offending location so scene diagnostics can print it.
class NonTransverse : public ValidationError {
  public:
    NonTransverse(const std::string& what, const std::string& location)
        : ValidationError(what + " at " + location), location_(location) {}
    const std::string& location() const { return location_; }

  private:
    std::string location_;
};

// An invariant term that the implemented formulas cannot reduce to knot data,
// e.g. an excision summand whose gluing matrix is not of surgery type.
class Unresolvable : public Error {
  public:
    explicit Unresolvable(const std::string& term)
        : Error("unresolvable term: " + term), term_(term) {}
    const std::string& term() const { return term_; }

  private:
    std::string term_;
};

}  // namespace foci
