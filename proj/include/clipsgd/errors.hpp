// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace clipsgd {

/// A vector carried a NaN/Inf entry where a finite value is required.
class NonFiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A claimed certificate (minimizer, moment bound) failed or does not exist.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lemma preconditions do not hold, so an audit refuses to run.
class AuditPreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clipsgd
