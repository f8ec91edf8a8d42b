#pragma once

#include <stdexcept>

namespace s2det {

// Malformed arguments, out-of-range labels, dimension mismatches. CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The face-flip partner of a partition was not unique. Never recovered from.
class LemmaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical certificate (bipartition, orbit table, relation sweep, ...) failed.
class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace s2det
