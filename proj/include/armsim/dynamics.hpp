#pragma once

#include <array>
#include <limits>

#include "armsim/kinematics.hpp"
#include "armsim/model.hpp"

namespace armsim {

/// Joint-space equation-of-motion terms:
///   tau = mass * thetaddot + coriolis * thetadot + gravity + tau_ext.
/// mass is symmetric positive-definite; with the Christoffel-form coriolis,
/// d/dt(mass) - 2 * coriolis is skew-symmetric.
struct DynamicsTerms {
  Mat6 mass = Mat6::Zero();
  Mat6 coriolis = Mat6::Zero();
  Vec6 gravity = Vec6::Zero();
};

enum class DerivMode {
  Analytic,          // differentiate the Jacobian products in closed form
  FiniteDifference,  // central differences; cross-check path for tests
};

Mat6 mass_matrix(const RobotModel& model, const Vec6& theta);

/// dA/dtheta_k for k = 1..6.
std::array<Mat6, 6> mass_matrix_partials(const RobotModel& model, const Vec6& theta,
                                         DerivMode mode = DerivMode::Analytic);

/// Christoffel-form velocity matrix built from the mass matrix partials.
Mat6 coriolis_matrix(const RobotModel& model, const Vec6& theta, const Vec6& theta_dot,
                     DerivMode mode = DerivMode::Analytic);

/// Generalized gravity load: g_k = sum_i J_vi^T (-m_i * gravity).
Vec6 gravity_vector(const RobotModel& model, const Vec6& theta);

/// All three terms sharing one chain evaluation; the per-step workhorse.
DynamicsTerms dynamics_terms(const RobotModel& model, const Vec6& theta, const Vec6& theta_dot);

/// thetaddot = mass^-1 (tau - coriolis*thetadot - gravity - tau_ext), solved
/// with a Cholesky factorization (mass is SPD by construction).
Vec6 forward_dynamics(const RobotModel& model, const Vec6& theta, const Vec6& theta_dot,
                      const Vec6& tau, const Vec6& tau_ext);
Vec6 forward_dynamics(const DynamicsTerms& terms, const Vec6& theta_dot, const Vec6& tau,
                      const Vec6& tau_ext);

struct TorqueCommand {
  Vec6 tau = Vec6::Zero();
  bool saturated = false;
};

/// tau = mass*thetaddot_des + coriolis*thetadot + gravity + tau_ext, clamped
/// componentwise to +-torque_sat. Saturation is reported, never an error.
TorqueCommand inverse_dynamics_torque(const RobotModel& model, const Vec6& theta,
                                      const Vec6& theta_dot, const Vec6& theta_ddot_des,
                                      const Vec6& tau_ext,
                                      double torque_sat = std::numeric_limits<double>::infinity());
TorqueCommand inverse_dynamics_torque(const DynamicsTerms& terms, const Vec6& theta_dot,
                                      const Vec6& theta_ddot_des, const Vec6& tau_ext,
                                      double torque_sat = std::numeric_limits<double>::infinity());

struct EnergyState {
  double kinetic = 0.0;    // [J]
  double potential = 0.0;  // [J], zero at the base plane
};

EnergyState total_energy(const RobotModel& model, const Vec6& theta, const Vec6& theta_dot);

}  // namespace armsim
