#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "osvf/systems.hpp"
#include "osvf/types.hpp"

namespace osvf {

/// Generic stage cost l(x, u). All shipped experiments are quadratic,
/// but EMPC-style costs can plug in through this interface.
using StageCostFn = std::function<double(const StateVec&, const InputVec&)>;
/// Generic terminal cost V_f(x).
using TerminalCostFn = std::function<double(const StateVec&)>;

/// Quadratic stage weights l(x, u) = x'Qx + u'Ru. Symmetrized at
/// construction; sign-indefinite weights are allowed.
struct QuadStageCost {
  Matrix Q;
  Matrix R;

  QuadStageCost() = default;
  QuadStageCost(Matrix Q_, Matrix R_);

  Eigen::Index state_dim() const { return Q.rows(); }
  Eigen::Index input_dim() const { return R.rows(); }
};

/// Quadratic terminal weight V_f(x) = x'Px, symmetrized at
/// construction, not required positive definite.
struct QuadTerminalCost {
  Matrix P;

  QuadTerminalCost() = default;
  explicit QuadTerminalCost(Matrix P_);

  Eigen::Index dim() const { return P.rows(); }
};

/// Stage cost rotated by the terminal cost,
///   ell(x, u, x+) = -V_f(x) + l(x, u) + V_f(f(x, u)),
/// with the successor computed through the stored system.
class AugmentedStageCost {
 public:
  AugmentedStageCost(StageCostFn stage, TerminalCostFn terminal,
                     std::shared_ptr<const DiscreteSystem> system);
  AugmentedStageCost(const QuadStageCost& stage, const QuadTerminalCost& terminal,
                     std::shared_ptr<const DiscreteSystem> system);

  const DiscreteSystem& system() const { return *system_; }
  std::shared_ptr<const DiscreteSystem> system_ptr() const { return system_; }
  double stage(const StateVec& x, const InputVec& u) const {
    return stage_(x, u);
  }
  double terminal(const StateVec& x) const { return terminal_(x); }

  /// ell with the successor recomputed from (x, u).
  double operator()(const StateVec& x, const InputVec& u) const;
  /// ell with a successor the caller already has.
  double with_successor(const StateVec& x, const InputVec& u,
                        const StateVec& x_next) const;

 private:
  StageCostFn stage_;
  TerminalCostFn terminal_;
  std::shared_ptr<const DiscreteSystem> system_;
};

/// x'Qx + u'Ru.
double stage_cost(const QuadStageCost& c, const StateVec& x, const InputVec& u);

/// x'Px.
double terminal_cost(const QuadTerminalCost& c, const StateVec& x);

/// -V_f(x) + l(x, u) + V_f(f(x, u)).
double augmented_stage_cost(const AugmentedStageCost& a, const StateVec& x,
                            const InputVec& u);

/// Classic horizon cost sum_i l(x_i, u_i) + V_f(x_N) over a trajectory
/// with len(x_seq) = len(u_seq) + 1.
double horizon_cost_J(const QuadStageCost& c, const QuadTerminalCost& t,
                      const std::vector<StateVec>& x_seq,
                      const std::vector<InputVec>& u_seq);

/// Rotated horizon cost sum_i ell(x_i, u_i, x_{i+1}). Telescoping makes
/// it equal J - V_f(x_0) on any dynamically consistent trajectory.
double rotated_cost(const AugmentedStageCost& a,
                    const std::vector<StateVec>& x_seq,
                    const std::vector<InputVec>& u_seq);

}  // namespace osvf
