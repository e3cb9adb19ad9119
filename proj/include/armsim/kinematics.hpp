#pragma once

#include <array>

#include "armsim/model.hpp"
#include "armsim/types.hpp"

namespace armsim {

/// Pose of a frame in the base frame {0}.
struct FramePose {
  Mat3 rotation = Mat3::Identity();
  Vec3 position = Vec3::Zero();
};

/// 6x6 geometric Jacobian split into linear and angular halves. For the COM
/// frame of link i < 6 the columns i+1..6 are exactly zero: distal joints do
/// not move link i.
struct SpatialJacobian {
  Mat36 linear = Mat36::Zero();
  Mat36 angular = Mat36::Zero();

  Mat6 stacked() const {
    Mat6 j;
    j.topRows<3>() = linear;
    j.bottomRows<3>() = angular;
    return j;
  }
};

/// Everything about the chain at a configuration that kinematics and dynamics
/// share: DH frame origins o_0..o_6, joint axes z_0..z_6, COM placements.
struct ChainState {
  std::array<Vec3, 7> origin;        // DH frame origins, base first
  std::array<Vec3, 7> axis;          // z axes of the DH frames
  std::array<Vec3, 6> com;           // COM of link i in {0}
  std::array<Mat3, 6> com_rotation;  // orientation of COM frame i in {0}
  Mat3 ee_rotation;                  // end-effector frame orientation
  // End-effector position is origin[6]: the chain's terminal DH frame is the
  // tool frame; the COM frames hang off the DH frames via com_frame.
  const Vec3& ee_position() const { return origin[6]; }
};

ChainState compute_chain(const RobotModel& model, const Vec6& theta);

/// Poses of the six COM frames (indices 0..5) and the end-effector frame
/// (index 6), all in the base frame.
std::array<FramePose, 7> forward_kinematics(const RobotModel& model, const Vec6& theta);

/// Jacobian of frame `index`: 1..6 select the COM frames, 7 the end-effector.
SpatialJacobian link_jacobian(const RobotModel& model, const Vec6& theta, int index);
SpatialJacobian link_jacobian(const ChainState& chain, int index);

/// Time derivative of the end-effector Jacobian, d/dt J7 = sum_j dJ7/dtheta_j * thetadot_j,
/// assembled analytically from axis and origin rates.
Mat6 jacobian_rate(const RobotModel& model, const Vec6& theta, const Vec6& theta_dot);
Mat6 jacobian_rate(const ChainState& chain, const Vec6& theta_dot);

}  // namespace armsim
