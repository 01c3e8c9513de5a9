#pragma once

#include <stdexcept>
#include <string>

namespace rvnorm {

/// Malformed input text: distribution strings, matrix files, rational literals.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (odd degree on an analytic path,
/// missing moments, non-Hermitian input to a Hermitian-only routine, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested moment order does not exist for the distribution.
class MomentExistenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace rvnorm
