// Error type shared by every module of the library.
#pragma once

#include <stdexcept>
#include <string>

namespace annet {

enum class ErrorKind {
  InvalidInput,       // malformed network, configuration, or parameter
  BudgetExceeded,     // an orbit did not close within the step budget
  CapExceeded,        // a state space exceeds the enumeration cap
  IllFormedCsan,      // a CSAN label table misses an entry
  ConditionViolated,  // a glueing precondition does not hold
  TraceMismatch,      // pseudo-orbits disagree on the dowel
  NotDecomposable,    // a network cannot be split into catalog gates
  MissingGate,        // a certificate lacks a gate used by a G-network
  CertificateInvalid, // a certificate failed verification
  Construction,       // an internal construction invariant broke
  Parse,              // a text or JSON input could not be parsed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace annet
