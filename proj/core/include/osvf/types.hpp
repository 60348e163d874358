#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace osvf {

/// Plant state, length n (fixed per system instance).
using StateVec = Eigen::VectorXd;
/// Control input, length m.
using InputVec = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Raised when inputs violate an operation's contract (dimension
/// mismatches, malformed weights, bad argument ranges).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iteration produces non-finite values or fails to
/// converge (rollout overflow, DARE divergence).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a constrained problem admits no solution (online MPC
/// problem infeasible, degenerate terminal set, ill-posed one-step
/// problem).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed configuration files.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

}  // namespace osvf
