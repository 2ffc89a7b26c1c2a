#pragma once

#include <stdexcept>
#include <string>

namespace optsample {

/// Bad input: dimension mismatch, empty lists, violated preconditions.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix could not be factored even after the maximum jitter was applied.
class SingularMatrix : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Fewer independent directions than requested (eigenbasis, span orthonormalization).
class RankDeficient : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Every start of a configuration search ended in the penalty region.
class SearchFailed : public std::runtime_error {
public:
  SearchFailed(const std::string& what, double best_penalty)
      : std::runtime_error(what), best_penalty_(best_penalty) {}
  double best_penalty() const noexcept { return best_penalty_; }

private:
  double best_penalty_;
};

/// A random target whose L2 norm is numerically zero.
class DegenerateTarget : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace optsample
