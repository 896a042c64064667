#pragma once

#include <stdexcept>
#include <string>

namespace whm {

// Invalid input: bad parameters, malformed files, contract violations by the caller.
class ParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive computation would exceed its configured enumeration limit.
// Oracles refuse rather than approximate.
class ExhaustionRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal inconsistency (a bug, not bad input).
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace whm
