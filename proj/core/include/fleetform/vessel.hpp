// Copyright 2026 The Fleetform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLEETFORM_VESSEL_HPP
#define FLEETFORM_VESSEL_HPP

#include "fleetform/types.hpp"

namespace fleetform
{

/// Margin kept between |pitch| and pi/2 before the Euler-rate transform is
/// declared singular.
inline constexpr double kPitchSingularityGuard = 1e-3;

/// Pose in the Earth-fixed frame (position m, ZYX Euler angles rad) and
/// velocity in the body frame (m/s, rad/s).
struct VesselState
{
  Vec6 eta = Vec6::Zero();
  Vec6 nu = Vec6::Zero();

  Vec3 position() const { return eta.head<3>(); }
  Vec3 attitude() const { return eta.tail<3>(); }
  Vec3 linear_velocity() const { return nu.head<3>(); }
  Vec3 angular_velocity() const { return nu.tail<3>(); }
};

/// Rigid-body constants of one vessel. Damping and added-mass coefficients
/// follow the sign convention in which both are negative for a physical
/// craft, so the effective inertias are m - beta_vdot and I - beta_wdot.
struct PhysicalParams
{
  double mass = 0.0;
  Vec3 inertia = Vec3::Zero();          // I_x, I_y, I_z
  Vec3 damping_linear = Vec3::Zero();   // beta_vx, beta_vy, beta_vz
  Vec3 damping_angular = Vec3::Zero();  // beta_wx, beta_wy, beta_wz
  Vec3 added_mass_linear = Vec3::Zero();
  Vec3 added_mass_angular = Vec3::Zero();

  /// Effective diagonal inertia (m - beta_vdot, I - beta_wdot), the
  /// diagonal of the mass matrix.
  Vec6 effective_inertia() const;
};

/// The 25 kg survey craft used throughout the bundled scenarios.
PhysicalParams reference_vessel();

/// Dynamic parameter vector: four entries per degree of freedom, laid out
/// (cross-term-1, cross-term-2, damping, input) for rows surge, sway,
/// heave, roll, pitch, yaw. The input coefficients are the inverse
/// effective inertias and are strictly positive for any physical craft.
struct ThetaVector
{
  Vec24 coeffs = Vec24::Zero();

  double cross1(int dof) const { return coeffs(4 * dof + 0); }
  double cross2(int dof) const { return coeffs(4 * dof + 1); }
  double damping(int dof) const { return coeffs(4 * dof + 2); }
  double input(int dof) const { return coeffs(4 * dof + 3); }
};

/// Block-diagonal kinematic transform J = blkdiag(R, T) for ZYX Euler
/// angles eta2 = (roll, pitch, yaw): R rotates body to Earth frame, T maps
/// body angular rates to Euler-angle rates. Throws singularity_error when
/// |pitch| is within kPitchSingularityGuard of pi/2.
Mat6 transform_jacobian(const Vec3& eta2);

/// Entrywise derivative of transform_jacobian along the Euler-angle rates
/// eta2_dot, i.e. sum_k dJ/dalpha_k * alpha_dot_k.
Mat6 transform_jacobian_rate(const Vec3& eta2, const Vec3& eta2_dot);

/// Maps physical constants to the parameter vector of the regression form,
/// so that regression(nu, tau) * theta reproduces the rigid-body
/// acceleration M^-1 (tau - C(nu) nu - D nu) of the diagonal-mass craft.
/// Throws if any effective inertia is non-positive.
ThetaVector theta_from_physical(const PhysicalParams& p);

/// 6x24 regressor of the velocity dynamics; row r has its four nonzeros in
/// columns 4r..4r+3.
RegressionMatrix regression(const Vec6& nu, const Vec6& tau);

/// Body-frame acceleration: regression(nu, tau) * theta + d_tilde.
Vec6 plant_acceleration(const Vec6& nu, const Vec6& tau, const ThetaVector& theta,
                        const Vec6& d_tilde);

/// Earth-frame pose rate J(eta2) * nu.
Vec6 kinematics_rate(const VesselState& state);

} // namespace fleetform

#endif // FLEETFORM_VESSEL_HPP
