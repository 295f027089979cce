#pragma once

#include <stdexcept>

namespace schreier {

// An input lies outside the domain on which a map is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Brute-force enumeration refused: the instance is too large for the oracle.
class OracleGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace schreier
