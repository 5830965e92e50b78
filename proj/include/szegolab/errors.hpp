#pragma once

#include <stdexcept>
#include <string>

namespace szegolab {

// Argument outside an operation's precondition (maps to CLI exit 2).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure could not reach its accuracy target (CLI exit 3).
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degenerate chart: the pullback metric is not positive-definite.
class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a structural contract (e.g. non-Hermitian matrix).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace szegolab
