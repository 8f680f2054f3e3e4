#pragma once

#include <stdexcept>
#include <string>

namespace cyclebound {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: malformed files, violated preconditions.
class invalid_input : public error {
 public:
  using error::error;
};

class loop_edge : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class index_out_of_range : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class edge_count_too_large : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class too_many_edges : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class not_prime : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class not_odd_prime : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class odd_exponent : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class parse_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

/// A configured enumeration budget ran out before the search finished.
class budget_exceeded : public error {
 public:
  using error::error;
};

/// An iterative numeric method did not reach its tolerance.
class convergence_failure : public error {
 public:
  using error::error;
};

/// Two independent computations of the same quantity disagree. Always a bug.
class internal_inconsistency : public error {
 public:
  using error::error;
};

/// The Newton engine's output differs from a printed identity.
class identity_mismatch : public error {
 public:
  using error::error;
};

}  // namespace cyclebound
