#pragma once

#include <array>
#include <variant>
#include <vector>

#include "armsim/types.hpp"

namespace armsim {

/// One row of a standard Denavit-Hartenberg table.
struct DhRow {
  double a = 0.0;             // link length [m]
  double alpha = 0.0;         // link twist [rad]
  double d = 0.0;             // link offset [m]
  double theta_offset = 0.0;  // constant added to the joint variable [rad]
};

/// Inertial description of one link.
struct LinkParam {
  double mass = 0.0;                     // [kg]
  Mat3 inertia_body = Mat3::Identity();  // about the COM, in the COM frame [kg m^2]
  RigidTransform com_frame;              // DH frame {i} -> COM frame
};

/// Kinematic and inertial description of the 6-link serial chain.
struct RobotModel {
  std::array<LinkParam, 6> links;
  std::array<DhRow, 6> dh_table;
  Vec3 gravity = Vec3(0.0, 0.0, -9.81);  // [m/s^2]
};

/// Fixed sphere with per-axis contact stiffness and damping.
struct Obstacle {
  Vec3 center = Vec3::Zero();      // [m]
  double radius = 0.0;             // [m]
  Vec3 stiffness = Vec3::Zero();   // diagonal spring constants [N/m]
  Vec3 damping = Vec3::Zero();     // diagonal damping coefficients [N s/m]
};

/// Gains, reference force and saturation limits of the combined controller.
struct ControllerConfig {
  Vec3 gain_c = Vec3(150.0, 150.0, 150.0);  // position-error gain diagonal [1/s]
  Vec3 gain_k = Vec3(350.0, 350.0, 350.0);  // system-error gain diagonal [1/s]
  double rho = 0.05;                        // error/force coupling [s/kg]
  Vec3 f_ref = Vec3(40.0, 50.0, 60.0);      // reference force bound [N]
  Vec3 f_ref_rate = Vec3::Zero();           // reference force rate [N/s]
  double accel_sat = 50.0;                  // symmetric clamp on desired accel [m/s^2]
  double torque_sat = 250.0;                // symmetric clamp on joint torque [N m]
  bool orientation_hold = false;            // PD the end-effector orientation to its initial value
  // Saturated error axis without contact geometry: fall back to the interior
  // law instead of raising. Disabled only to surface pipeline bugs in tests.
  bool free_saturation_fallback = true;
};

/// Per-axis sinusoid: offset + amplitude * wave(omega * t + phase).
struct SineAxis {
  enum class Wave { Sin, Cos };
  double offset = 0.0;     // [m]
  double amplitude = 0.0;  // [m]
  double omega = 0.0;      // [rad/s]
  double phase = 0.0;      // [rad]
  Wave wave = Wave::Sin;
};

struct ParametricTrajectory {
  std::array<SineAxis, 3> axes;
};

/// One knot of a sampled trajectory.
struct TrajectorySample {
  double t = 0.0;
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
};

/// Sampled trajectory on a strictly increasing time grid. Position and
/// velocity are interpolated with a cubic Hermite segment per interval;
/// acceleration is interpolated linearly between the stored knot values.
struct SampledTrajectory {
  std::vector<TrajectorySample> samples;
};

using TrajectorySpec = std::variant<ParametricTrajectory, SampledTrajectory>;

/// Complete description of one simulation run.
struct Scenario {
  std::string name;
  RobotModel robot;
  std::vector<Obstacle> obstacles;
  ControllerConfig controller;
  TrajectorySpec trajectory;
  Vec6 initial_joints = Vec6::Zero();  // [rad]
  double duration = 0.0;               // [s]
  double dt = 0.0;                     // [s]
};

struct ReferencePoint {
  Vec3 position = Vec3::Zero();      // [m]
  Vec3 velocity = Vec3::Zero();      // [m/s]
  Vec3 acceleration = Vec3::Zero();  // [m/s^2]
};

/// Reference pose/rates at time t. Parametric trajectories are defined for all
/// t; sampled ones throw std::out_of_range outside their grid.
ReferencePoint reference_at(const TrajectorySpec& traj, double t);

/// Built-in 6-link tabletop-cobot parameter set. Deterministic; all model
/// invariants hold. The values are representative, not vendor data.
RobotModel default_robot();

// Invariant checks. Throw ValidationError naming the offending field.
void validate(const LinkParam& link, const std::string& field_prefix);
void validate(const RobotModel& model);
void validate(const Obstacle& obstacle, const std::string& field_prefix = "obstacle");
void validate(const ControllerConfig& config);
void validate(const TrajectorySpec& traj);
void validate(const Scenario& scenario);

}  // namespace armsim
