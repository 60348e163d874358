#include "osvf/systems.hpp"

#include <cmath>

namespace osvf {

BoxSet::BoxSet(Vector lo, Vector hi) : lower(std::move(lo)), upper(std::move(hi)) {
  require(lower.size() == upper.size(), "BoxSet: lower/upper size mismatch");
  require((lower.array() <= upper.array()).all(),
          "BoxSet: requires lower <= upper elementwise");
  require(lower.allFinite() && upper.allFinite(), "BoxSet: non-finite bound");
}

BoxSet BoxSet::symmetric(const Vector& half_width) {
  return BoxSet(-half_width, half_width);
}

bool BoxSet::contains_origin_interior() const {
  return (lower.array() < 0.0).all() && (upper.array() > 0.0).all();
}

bool box_contains(const BoxSet& set, const Vector& v) {
  require(v.size() == set.dim(), "box_contains: dimension mismatch");
  return (v.array() >= set.lower.array()).all() &&
         (v.array() <= set.upper.array()).all();
}

LinearSystem::LinearSystem(Matrix A_, Matrix B_)
    : A(std::move(A_)), B(std::move(B_)) {
  require(A.rows() == A.cols(), "LinearSystem: A must be square");
  require(B.rows() == A.rows(), "LinearSystem: A/B row mismatch");
  require(A.allFinite() && B.allFinite(), "LinearSystem: non-finite entry");
}

LinearDiscreteSystem::LinearDiscreteSystem(LinearSystem sys)
    : sys_(std::move(sys)) {}

LinearDiscreteSystem::LinearDiscreteSystem(Matrix A, Matrix B)
    : sys_(std::move(A), std::move(B)) {}

StateVec LinearDiscreteSystem::transition(const StateVec& x,
                                          const InputVec& u) const {
  return sys_.A * x + sys_.B * u;
}

std::optional<LinearSystem> LinearDiscreteSystem::analytic_jacobian(
    const StateVec&, const InputVec&) const {
  return sys_;
}

CartSpringSystem::CartSpringSystem(double k0, double hd, double mass, double dt)
    : k0_(k0), hd_(hd), mass_(mass), dt_(dt) {
  require(dt > 0.0, "CartSpringSystem: dt must be positive");
  require(mass > 0.0, "CartSpringSystem: mass must be positive");
}

StateVec CartSpringSystem::transition(const StateVec& x,
                                      const InputVec& u) const {
  StateVec xp(2);
  xp(0) = x(0) + dt_ * x(1);
  xp(1) = x(1) + dt_ * (-(k0_ / mass_) * std::exp(-x(0)) * x(0) -
                        (hd_ / mass_) * x(1) + u(0) / mass_);
  return xp;
}

std::optional<LinearSystem> CartSpringSystem::analytic_jacobian(
    const StateVec& x, const InputVec&) const {
  Matrix A(2, 2);
  Matrix B(2, 1);
  A << 1.0, dt_,  //
      -dt_ * (k0_ / mass_) * std::exp(-x(0)) * (1.0 - x(0)),
      1.0 - dt_ * hd_ / mass_;
  B << 0.0, dt_ / mass_;
  return LinearSystem(std::move(A), std::move(B));
}

StateVec step(const DiscreteSystem& system, const StateVec& x,
              const InputVec& u) {
  require(x.size() == system.state_dim(), "step: state dimension mismatch");
  require(u.size() == system.input_dim(), "step: input dimension mismatch");
  return system.transition(x, u);
}

LinearSystem linearize(const DiscreteSystem& system, const StateVec& x_bar,
                       const InputVec& u_bar) {
  require(x_bar.size() == system.state_dim(),
          "linearize: state dimension mismatch");
  require(u_bar.size() == system.input_dim(),
          "linearize: input dimension mismatch");
  if (auto jac = system.analytic_jacobian(x_bar, u_bar)) {
    return *jac;
  }
  constexpr double h = 1e-6;  // central differences, O(1)-scaled states
  const Eigen::Index n = system.state_dim();
  const Eigen::Index m = system.input_dim();
  Matrix A(n, n);
  Matrix B(n, m);
  for (Eigen::Index j = 0; j < n; ++j) {
    StateVec xp = x_bar, xm = x_bar;
    xp(j) += h;
    xm(j) -= h;
    A.col(j) = (system.transition(xp, u_bar) - system.transition(xm, u_bar)) /
               (2.0 * h);
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    InputVec up = u_bar, um = u_bar;
    up(j) += h;
    um(j) -= h;
    B.col(j) = (system.transition(x_bar, up) - system.transition(x_bar, um)) /
               (2.0 * h);
  }
  return LinearSystem(std::move(A), std::move(B));
}

std::vector<StateVec> rollout(const DiscreteSystem& system, const StateVec& x0,
                              const std::vector<InputVec>& u_seq) {
  require(x0.size() == system.state_dim(), "rollout: state dimension mismatch");
  for (const auto& u : u_seq) {
    require(u.size() == system.input_dim(),
            "rollout: input dimension mismatch");
  }
  std::vector<StateVec> xs;
  xs.reserve(u_seq.size() + 1);
  xs.push_back(x0);
  for (std::size_t i = 0; i < u_seq.size(); ++i) {
    StateVec next = system.transition(xs.back(), u_seq[i]);
    if (!next.allFinite()) {
      throw NumericError("rollout: non-finite state at step " +
                         std::to_string(i + 1));
    }
    xs.push_back(std::move(next));
  }
  return xs;
}

}  // namespace osvf
