#pragma once

#include <stdexcept>
#include <string>

namespace mdist {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed profile/metric text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Precondition violations: bad indices, alpha out of range, dimension
// mismatches, unsupported parameter combinations.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Every forced-optimum LP of a distortion query was infeasible.
class DegenerateProfileError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Intensity-assignment enumeration would exceed the configured budget.
class BudgetExceededError : public DomainError {
 public:
  using DomainError::DomainError;
};

// PoII ratio has an infinite numerator over a finite denominator.
class InfinitePoiiError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A dual certificate violates a sign constraint or a dual inequality.
class InfeasibleCertificateError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The equilibrium identity (r^k)'M = t_k 1' failed; indicates a bug.
class IdentityViolatedError : public Error {
 public:
  using Error::Error;
};

// No alternative admits a fractional perfect matching; contradicts the
// ranking-matching guarantee, so treated as an internal failure.
class NoFeasibleAlternativeError : public Error {
 public:
  using Error::Error;
};

// robust winner: no agent within the requested intensity-rank cutoff.
class EmptyCoreError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace mdist
