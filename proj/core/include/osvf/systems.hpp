#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "osvf/types.hpp"

namespace osvf {

/// Axis-aligned box {v : lower <= v <= upper}, used for the state set X,
/// the input set U and solver decision bounds.
struct BoxSet {
  Vector lower;
  Vector upper;

  BoxSet() = default;
  BoxSet(Vector lo, Vector hi);

  /// Scalar convenience, [-b, b].
  static BoxSet symmetric(const Vector& half_width);

  Eigen::Index dim() const { return lower.size(); }

  /// True iff the origin lies strictly inside the box. Constraint sets
  /// X and U must satisfy this; solver decision boxes need not.
  bool contains_origin_interior() const;
};

/// Closed-set membership test, lower <= v <= upper elementwise.
bool box_contains(const BoxSet& set, const Vector& v);

/// Pair (A, B) of a linear map x+ = A x + B u, also the result of
/// linearization.
struct LinearSystem {
  Matrix A;
  Matrix B;

  LinearSystem() = default;
  LinearSystem(Matrix A_, Matrix B_);

  Eigen::Index state_dim() const { return A.rows(); }
  Eigen::Index input_dim() const { return B.cols(); }
};

/// Discrete-time state-transition map x+ = f(x, u) with an optional
/// analytic Jacobian. Implementations must fix their dimensions at
/// construction and map (0, 0) to 0.
class DiscreteSystem {
 public:
  virtual ~DiscreteSystem() = default;

  virtual Eigen::Index state_dim() const = 0;
  virtual Eigen::Index input_dim() const = 0;

  /// Transition map. Dimension checks are done by the free function
  /// step(); implementations may assume consistent sizes.
  virtual StateVec transition(const StateVec& x, const InputVec& u) const = 0;

  /// Analytic Jacobians at (x, u) if the model provides them.
  virtual std::optional<LinearSystem> analytic_jacobian(
      const StateVec& x, const InputVec& u) const {
    (void)x;
    (void)u;
    return std::nullopt;
  }
};

/// x+ = A x + B u.
class LinearDiscreteSystem final : public DiscreteSystem {
 public:
  explicit LinearDiscreteSystem(LinearSystem sys);
  LinearDiscreteSystem(Matrix A, Matrix B);

  Eigen::Index state_dim() const override { return sys_.state_dim(); }
  Eigen::Index input_dim() const override { return sys_.input_dim(); }
  StateVec transition(const StateVec& x, const InputVec& u) const override;
  std::optional<LinearSystem> analytic_jacobian(
      const StateVec& x, const InputVec& u) const override;

  const LinearSystem& linear() const { return sys_; }

 private:
  LinearSystem sys_;
};

/// Cart on a plane attached to a nonlinear spring k_s = k0 * exp(-x1)
/// and a damper, discretized with the Euler map
///
///   x1+ = x1 + dt * x2
///   x2+ = x2 + dt * (-(k0/mass) * exp(-x1) * x1 - (hd/mass) * x2 + u/mass)
///
/// With the default parameters the velocity update is
/// x2+ = -0.132 exp(-x1) x1 + 0.56 x2 + 0.4 u, consistent with the
/// origin linearization A = [[1, 0.4], [-0.132, 0.56]], B = [0; 0.4].
class CartSpringSystem final : public DiscreteSystem {
 public:
  CartSpringSystem(double k0 = 0.33, double hd = 1.1, double mass = 1.0,
                   double dt = 0.4);

  Eigen::Index state_dim() const override { return 2; }
  Eigen::Index input_dim() const override { return 1; }
  StateVec transition(const StateVec& x, const InputVec& u) const override;
  std::optional<LinearSystem> analytic_jacobian(
      const StateVec& x, const InputVec& u) const override;

  double k0() const { return k0_; }
  double hd() const { return hd_; }
  double mass() const { return mass_; }
  double dt() const { return dt_; }

 private:
  double k0_;
  double hd_;
  double mass_;
  double dt_;
};

/// One transition x+ = f(x, u) with dimension checks.
StateVec step(const DiscreteSystem& system, const StateVec& x,
              const InputVec& u);

/// Jacobians of f at (x_bar, u_bar): analytic when the model provides
/// them, central finite differences (step 1e-6) otherwise.
LinearSystem linearize(const DiscreteSystem& system, const StateVec& x_bar,
                       const InputVec& u_bar);

/// Trajectory (x_0, ..., x_N) under the input sequence; length is
/// u_seq.size() + 1. Throws NumericError naming the step index if a
/// non-finite state appears.
std::vector<StateVec> rollout(const DiscreteSystem& system, const StateVec& x0,
                              const std::vector<InputVec>& u_seq);

}  // namespace osvf
