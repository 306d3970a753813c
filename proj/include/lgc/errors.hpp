#pragma once

#include <stdexcept>
#include <string>

namespace lgc {

// Malformed input or parameters outside their documented range.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs are well-formed but the requested quantity does not exist for them
// (empty cut, zero-volume side, disconnected induced subgraph, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// PageRank-Nibble found no threshold set inside the c-window.
class NoCandidateCut : public DomainError {
 public:
  using DomainError::DomainError;
};

// The vol0 doubling search never produced an acceptable cut.
class NoValidVol0 : public DomainError {
 public:
  NoValidVol0(const std::string& what, double best_conductance)
      : DomainError(what), best_conductance_(best_conductance) {}

  // Smallest conductance seen over all tried vol0 values; +inf if none ran.
  double best_conductance() const { return best_conductance_; }

 private:
  double best_conductance_;
};

}  // namespace lgc
