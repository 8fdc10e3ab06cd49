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

#include "fleetform/control.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace fleetform
{

namespace
{

Mat6 inverse_jacobian(const Vec3& eta2)
{
  const Mat6 j = transform_jacobian(eta2);
  Mat6 inv = Mat6::Zero();
  // Rotation block inverts by transpose; the Euler-rate block is a dense 3x3.
  inv.topLeftCorner<3, 3>() = j.topLeftCorner<3, 3>().transpose();
  inv.bottomRightCorner<3, 3>() = j.bottomRightCorner<3, 3>().inverse();
  return inv;
}

Vec6 saturate(const Vec6& z, double layer)
{
  Vec6 s;
  for (int k = 0; k < 6; ++k)
  {
    s(k) = std::clamp(z(k) / layer, -1.0, 1.0);
  }
  return s;
}

// Shared equivalence part of the three torque laws; `feedback` is vartheta,
// z, or sat(z) depending on the law.
ControlOutput equivalence_control(const NeighborhoodView& view, const EstimatorState& est,
                                  const ControlGains& gains, const Vec6* feedback)
{
  ControlOutput out;
  out.error = consensus_error(view);
  out.v_desired = virtual_velocity(view, gains.k1);
  out.z = auxiliary_z(view.self.nu, out.v_desired);

  const Vec6 vd_dot = virtual_velocity_rate(view, gains.k1);
  const Vec6& v = view.self.nu;
  const EstimatedModel model = matrices_from_theta(est.theta_hat, v, gains.b_floor);
  out.regularized = model.regularized;

  const Vec6 fb = feedback != nullptr ? *feedback : out.z;
  const Vec6 bracket =
      vd_dot + model.c_bar * v + model.d_bar * v + model.g_bar - gains.k2.cwiseProduct(fb);
  out.tau = model.b_bar.diagonal().cwiseInverse().cwiseProduct(bracket);
  return out;
}

} // namespace

Vec6 consensus_error(const NeighborhoodView& view)
{
  Vec6 e = view.b_weight * (view.self.eta - view.desired.eta_d);
  for (const NeighborInfo& nb : view.neighbors)
  {
    e += nb.weight * (view.self.eta - nb.eta - nb.offset);
  }
  return e;
}

Vec6 consensus_error_rate(const NeighborhoodView& view)
{
  Vec6 e_dot = view.b_weight * (view.self_rate - view.desired.eta_d_rate);
  for (const NeighborInfo& nb : view.neighbors)
  {
    e_dot += nb.weight * (view.self_rate - nb.eta_rate);
  }
  return e_dot;
}

Vec6 virtual_velocity(const NeighborhoodView& view, const Vec6& k1)
{
  const Vec6 e = consensus_error(view);
  return inverse_jacobian(view.self.attitude()) *
         (view.desired.eta_d_rate - k1.cwiseProduct(e));
}

Vec6 virtual_velocity_rate(const NeighborhoodView& view, const Vec6& k1)
{
  const Vec6 e = consensus_error(view);
  const Vec6 e_dot = consensus_error_rate(view);
  const Mat6 j_inv = inverse_jacobian(view.self.attitude());
  const Mat6 j_dot =
      transform_jacobian_rate(view.self.attitude(), view.self_rate.tail<3>());

  const Vec6 kinematic_target = view.desired.eta_d_rate - k1.cwiseProduct(e);
  const Vec6 kinematic_target_rate = view.desired.eta_d_accel - k1.cwiseProduct(e_dot);
  return -j_inv * j_dot * j_inv * kinematic_target + j_inv * kinematic_target_rate;
}

Vec6 auxiliary_z(const Vec6& v, const Vec6& v_d)
{
  return v - v_d;
}

EstimatedModel matrices_from_theta(const ThetaVector& theta_hat, const Vec6& v, double b_floor)
{
  const double vx = v(0), vy = v(1), vz = v(2);
  const double wx = v(3), wy = v(4);

  EstimatedModel m;
  for (int dof = 0; dof < 6; ++dof)
  {
    double input = theta_hat.input(dof);
    if (std::abs(input) < b_floor)
    {
      input = input < 0.0 ? -b_floor : b_floor;
      m.regularized = true;
    }
    m.b_bar(dof, dof) = input;
    m.d_bar(dof, dof) = -theta_hat.damping(dof);
  }

  // Each cross term theta * (f1 * f2) is placed in the column of its second
  // factor so that C_bar(v) * v reproduces minus the regressor contribution.
  m.c_bar(0, 4) = -theta_hat.cross1(0) * vz;
  m.c_bar(0, 5) = -theta_hat.cross2(0) * vy;
  m.c_bar(1, 3) = -theta_hat.cross1(1) * vz;
  m.c_bar(1, 5) = -theta_hat.cross2(1) * vx;
  m.c_bar(2, 3) = -theta_hat.cross1(2) * vy;
  m.c_bar(2, 4) = -theta_hat.cross2(2) * vx;
  m.c_bar(3, 2) = -theta_hat.cross1(3) * vy;
  m.c_bar(3, 5) = -theta_hat.cross2(3) * wy;
  m.c_bar(4, 2) = -theta_hat.cross1(4) * vx;
  m.c_bar(4, 5) = -theta_hat.cross2(4) * wx;
  m.c_bar(5, 1) = -theta_hat.cross1(5) * vx;
  m.c_bar(5, 4) = -theta_hat.cross2(5) * wx;
  return m;
}

ControlOutput blc_control(const NeighborhoodView& view, const EstimatorState& est,
                          const NeuroState& neuro, const ControlGains& gains)
{
  return equivalence_control(view, est, gains, &neuro.vartheta);
}

ControlOutput lc_control(const NeighborhoodView& view, const EstimatorState& est,
                         const ControlGains& gains)
{
  return equivalence_control(view, est, gains, nullptr);
}

ControlOutput lsmc_control(const NeighborhoodView& view, const EstimatorState& est,
                           const ControlGains& gains)
{
  // The feedback slot needs sat(z); compute z first, then rerun the shared
  // path with the saturated signal.
  ControlOutput probe;
  probe.v_desired = virtual_velocity(view, gains.k1);
  const Vec6 s = saturate(auxiliary_z(view.self.nu, probe.v_desired), gains.sat_layer);
  return equivalence_control(view, est, gains, &s);
}

} // namespace fleetform
