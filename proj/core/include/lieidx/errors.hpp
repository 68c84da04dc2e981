#pragma once

#include <stdexcept>
#include <string>

namespace lieidx {

/// Caller supplied something the operation's contract rejects.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact invariant that must hold by theory did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A randomized search ran out of budget without a witness.
class SamplingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lieidx
