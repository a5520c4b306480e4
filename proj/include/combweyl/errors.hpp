#pragma once

#include <stdexcept>
#include <string>

namespace combweyl {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Documented precondition violated (distinct from a bad value range).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A size guard was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric factorization broke down even after the jitter retries.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lambda sits on a Dirichlet eigenvalue of a tooth, where the
/// Dirichlet-to-Neumann map is undefined.
class ExcludedLambdaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace combweyl
