#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Bad user input: malformed files, violated preconditions, wrong sizes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run beyond its desk-scale guard.
class TooLargeError : public InputError {
 public:
  using InputError::InputError;
};

/// A matroid has a loop where the caller requires looplessness.
class LoopError : public InputError {
 public:
  using InputError::InputError;
};

/// A standardness question was asked for a coloring that does not use
/// exactly rank-many colors.
class NotRankPreservingError : public InputError {
 public:
  using InputError::InputError;
};

/// A certificate that a theorem guarantees could not be found. Seeing this
/// means a bug (or a false theorem); it is never an input problem.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rainbow
