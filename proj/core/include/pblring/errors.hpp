#pragma once

#include <stdexcept>
#include <string>

namespace pblring {

// Exception hierarchy. The CLI maps each kind to a process exit code.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring recipe could not be built (bad generators, unreadable table file, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A size limit was exceeded (order bound, matrix/product desk bound).
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Something that is a theorem of ring theory did not hold. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its hypothesis (non-unital ring, non-prime ideal, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Ideals from different parent rings were combined.
class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("ideals belong to different rings") {}
};

}  // namespace pblring
