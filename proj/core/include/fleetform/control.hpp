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

#ifndef FLEETFORM_CONTROL_HPP
#define FLEETFORM_CONTROL_HPP

#include <vector>

#include "fleetform/estimator.hpp"
#include "fleetform/shunting.hpp"
#include "fleetform/vessel.hpp"

namespace fleetform
{

/// What vessel i knows about neighbor j: measured pose, measured pose rate,
/// the formation offset to hold, and the link weight.
struct NeighborInfo
{
  int index = -1;
  Vec6 eta = Vec6::Zero();
  Vec6 eta_rate = Vec6::Zero();
  Vec6 offset = Vec6::Zero(); // attitude components always zero
  double weight = 0.0;
};

/// Desired pose, its rate and acceleration at one instant.
struct ReferenceSample
{
  Vec6 eta_d = Vec6::Zero();
  Vec6 eta_d_rate = Vec6::Zero();
  Vec6 eta_d_accel = Vec6::Zero();
};

/// Everything a distributed controller may read: its own measured state and
/// pose rate, the states of direct neighbors only, and the reference. By
/// construction a controller cannot see a non-neighbor vessel.
struct NeighborhoodView
{
  VesselState self;
  Vec6 self_rate = Vec6::Zero(); // eta_dot of self
  std::vector<NeighborInfo> neighbors;
  double b_weight = 0.0;
  ReferenceSample desired;
};

/// Diagonal gains of the kinematic and dynamic loops plus the shunting
/// constants and the sliding-mode boundary layer width.
struct ControlGains
{
  Vec6 k1 = Vec6::Zero();
  Vec6 k2 = Vec6::Zero();
  ShuntingParams shunting;
  double sat_layer = 1.0;
  /// Lower bound applied to |diag(B_bar)| before inversion; keeps the
  /// torque finite while the input-coefficient estimates are still near
  /// their zero initialization.
  double b_floor = 1e-2;
};

/// Weighted formation error
///   e_i = sum_j a_ij (eta_i - eta_j - Delta_ij) + b_i (eta_i - eta_d).
Vec6 consensus_error(const NeighborhoodView& view);

/// Time derivative of consensus_error (offsets are constant):
///   e_dot_i = sum_j a_ij (eta_dot_i - eta_dot_j) + b_i (eta_dot_i - eta_d_rate).
Vec6 consensus_error_rate(const NeighborhoodView& view);

/// Backstepping virtual velocity v_d = J^-1 (-K1 e + eta_d_rate).
Vec6 virtual_velocity(const NeighborhoodView& view, const Vec6& k1);

/// Analytic d/dt of virtual_velocity, using
///   d(J^-1)/dt = -J^-1 Jdot J^-1.
Vec6 virtual_velocity_rate(const NeighborhoodView& view, const Vec6& k1);

/// z = v - v_d.
Vec6 auxiliary_z(const Vec6& v, const Vec6& v_d);

/// Model matrices reassembled from a parameter estimate so that for all tau
///   psi(v, tau) * theta = -C_bar v - D_bar v - G_bar + B_bar tau.
/// G_bar is identically zero (neutrally buoyant craft). Diagonal entries of
/// B_bar smaller in magnitude than b_floor are clamped to sign * b_floor
/// and the result is flagged as regularized.
struct EstimatedModel
{
  Mat6 b_bar = Mat6::Zero();
  Mat6 c_bar = Mat6::Zero();
  Mat6 d_bar = Mat6::Zero();
  Vec6 g_bar = Vec6::Zero();
  bool regularized = false;
};

EstimatedModel matrices_from_theta(const ThetaVector& theta_hat, const Vec6& v,
                                   double b_floor = 1e-2);

/// One controller evaluation: the torque plus the intermediate quantities a
/// trace wants to see.
struct ControlOutput
{
  Vec6 tau = Vec6::Zero();
  Vec6 error = Vec6::Zero();      // e_i
  Vec6 v_desired = Vec6::Zero();  // v_d
  Vec6 z = Vec6::Zero();          // v - v_d
  bool regularized = false;
};

/// Neurodynamics-aided law: tau = B^-1 [vd_dot + C v + D v + G - K2 vartheta].
ControlOutput blc_control(const NeighborhoodView& view, const EstimatorState& est,
                          const NeuroState& neuro, const ControlGains& gains);

/// Baseline law with the raw auxiliary variable in the feedback slot.
ControlOutput lc_control(const NeighborhoodView& view, const EstimatorState& est,
                         const ControlGains& gains);

/// Baseline sliding-mode law with boundary-layer saturation s = sat(z).
ControlOutput lsmc_control(const NeighborhoodView& view, const EstimatorState& est,
                           const ControlGains& gains);

} // namespace fleetform

#endif // FLEETFORM_CONTROL_HPP
