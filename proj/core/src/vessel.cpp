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

#include "fleetform/vessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fleetform
{

namespace
{

void check_pitch(double pitch)
{
  if (std::abs(pitch) >= std::numbers::pi / 2.0 - kPitchSingularityGuard)
  {
    throw singularity_error("kinematic transform singular at pitch " + std::to_string(pitch));
  }
}

Mat3 rot_x(double a)
{
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << 1, 0, 0, 0, c, -s, 0, s, c;
  return r;
}

Mat3 rot_y(double a)
{
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << c, 0, s, 0, 1, 0, -s, 0, c;
  return r;
}

Mat3 rot_z(double a)
{
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Mat3 drot_x(double a)
{
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << 0, 0, 0, 0, -s, -c, 0, c, -s;
  return r;
}

Mat3 drot_y(double a)
{
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << -s, 0, c, 0, 0, 0, -c, 0, -s;
  return r;
}

Mat3 drot_z(double a)
{
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << -s, -c, 0, c, -s, 0, 0, 0, 0;
  return r;
}

// Body angular rate -> Euler angle rate map for ZYX angles.
Mat3 euler_rate_map(double roll, double pitch)
{
  const double sr = std::sin(roll), cr = std::cos(roll);
  const double tp = std::tan(pitch), cp = std::cos(pitch);
  Mat3 t;
  t << 1, sr * tp, cr * tp,
       0, cr, -sr,
       0, sr / cp, cr / cp;
  return t;
}

Mat3 euler_rate_map_partial_roll(double roll, double pitch)
{
  const double sr = std::sin(roll), cr = std::cos(roll);
  const double tp = std::tan(pitch), cp = std::cos(pitch);
  Mat3 t;
  t << 0, cr * tp, -sr * tp,
       0, -sr, -cr,
       0, cr / cp, -sr / cp;
  return t;
}

Mat3 euler_rate_map_partial_pitch(double roll, double pitch)
{
  const double sr = std::sin(roll), cr = std::cos(roll);
  const double cp = std::cos(pitch), sp = std::sin(pitch);
  const double cp2 = cp * cp;
  Mat3 t;
  t << 0, sr / cp2, cr / cp2,
       0, 0, 0,
       0, sr * sp / cp2, cr * sp / cp2;
  return t;
}

} // namespace

Vec6 PhysicalParams::effective_inertia() const
{
  Vec6 m;
  m.head<3>() = Vec3::Constant(mass) - added_mass_linear;
  m.tail<3>() = inertia - added_mass_angular;
  return m;
}

PhysicalParams reference_vessel()
{
  PhysicalParams p;
  p.mass = 25.0;
  p.inertia = Vec3(25.0, 20.0, 30.0);
  p.damping_linear = Vec3(-10.0, -8.0, -12.0);
  p.damping_angular = Vec3(-0.35, -0.2, -0.25);
  p.added_mass_linear = Vec3(-8.0, -6.0, -8.0);
  p.added_mass_angular = Vec3(-25.0, -35.0, -30.0);
  return p;
}

Mat6 transform_jacobian(const Vec3& eta2)
{
  check_pitch(eta2(1));
  Mat6 j = Mat6::Zero();
  j.topLeftCorner<3, 3>() = rot_z(eta2(2)) * rot_y(eta2(1)) * rot_x(eta2(0));
  j.bottomRightCorner<3, 3>() = euler_rate_map(eta2(0), eta2(1));
  return j;
}

Mat6 transform_jacobian_rate(const Vec3& eta2, const Vec3& eta2_dot)
{
  check_pitch(eta2(1));
  const double roll = eta2(0), pitch = eta2(1), yaw = eta2(2);

  const Mat3 dr = rot_z(yaw) * rot_y(pitch) * drot_x(roll) * eta2_dot(0) +
                  rot_z(yaw) * drot_y(pitch) * rot_x(roll) * eta2_dot(1) +
                  drot_z(yaw) * rot_y(pitch) * rot_x(roll) * eta2_dot(2);
  const Mat3 dt = euler_rate_map_partial_roll(roll, pitch) * eta2_dot(0) +
                  euler_rate_map_partial_pitch(roll, pitch) * eta2_dot(1);

  Mat6 j = Mat6::Zero();
  j.topLeftCorner<3, 3>() = dr;
  j.bottomRightCorner<3, 3>() = dt;
  return j;
}

ThetaVector theta_from_physical(const PhysicalParams& p)
{
  if (!(p.mass > 0.0))
  {
    throw std::invalid_argument("vessel: mass must be positive");
  }
  if (!(p.inertia.minCoeff() > 0.0))
  {
    throw std::invalid_argument("vessel: inertias must be positive");
  }
  const Vec6 m = p.effective_inertia();
  for (int k = 0; k < 6; ++k)
  {
    if (!(m(k) > 0.0))
    {
      throw std::invalid_argument("vessel: effective inertia of DOF " + std::to_string(k) +
                                  " is non-positive (" + std::to_string(m(k)) + ")");
    }
  }

  // Coriolis cross couplings of the diagonal-mass craft, expressed per DOF
  // against the regressor layout (cross1, cross2, damping, input).
  ThetaVector theta;
  Vec24& c = theta.coeffs;
  c(0) = -m(2) / m(0);              // surge: v_z*w_y
  c(1) = m(1) / m(0);               //        v_y*w_z
  c(2) = p.damping_linear(0) / m(0);
  c(3) = 1.0 / m(0);

  c(4) = m(2) / m(1);               // sway: v_z*w_x
  c(5) = -m(0) / m(1);              //       v_x*w_z
  c(6) = p.damping_linear(1) / m(1);
  c(7) = 1.0 / m(1);

  c(8) = -m(1) / m(2);              // heave: v_y*w_x
  c(9) = m(0) / m(2);               //        v_x*w_y
  c(10) = p.damping_linear(2) / m(2);
  c(11) = 1.0 / m(2);

  c(12) = (m(1) - m(2)) / m(3);     // roll: v_y*v_z
  c(13) = (m(4) - m(5)) / m(3);     //       w_y*w_z
  c(14) = p.damping_angular(0) / m(3);
  c(15) = 1.0 / m(3);

  c(16) = (m(2) - m(0)) / m(4);     // pitch: v_x*v_z
  c(17) = (m(5) - m(3)) / m(4);     //        w_x*w_z
  c(18) = p.damping_angular(1) / m(4);
  c(19) = 1.0 / m(4);

  c(20) = (m(0) - m(1)) / m(5);     // yaw: v_x*v_y
  c(21) = (m(3) - m(4)) / m(5);     //      w_x*w_y
  c(22) = p.damping_angular(2) / m(5);
  c(23) = 1.0 / m(5);
  return theta;
}

RegressionMatrix regression(const Vec6& nu, const Vec6& tau)
{
  const double vx = nu(0), vy = nu(1), vz = nu(2);
  const double wx = nu(3), wy = nu(4), wz = nu(5);

  RegressionMatrix psi = RegressionMatrix::Zero();
  psi(0, 0) = vz * wy;
  psi(0, 1) = vy * wz;
  psi(0, 2) = vx;
  psi(0, 3) = tau(0);

  psi(1, 4) = vz * wx;
  psi(1, 5) = vx * wz;
  psi(1, 6) = vy;
  psi(1, 7) = tau(1);

  psi(2, 8) = vy * wx;
  psi(2, 9) = vx * wy;
  psi(2, 10) = vz;
  psi(2, 11) = tau(2);

  psi(3, 12) = vy * vz;
  psi(3, 13) = wy * wz;
  psi(3, 14) = wx;
  psi(3, 15) = tau(3);

  psi(4, 16) = vx * vz;
  psi(4, 17) = wx * wz;
  psi(4, 18) = wy;
  psi(4, 19) = tau(4);

  psi(5, 20) = vx * vy;
  psi(5, 21) = wx * wy;
  psi(5, 22) = wz;
  psi(5, 23) = tau(5);
  return psi;
}

Vec6 plant_acceleration(const Vec6& nu, const Vec6& tau, const ThetaVector& theta,
                        const Vec6& d_tilde)
{
  return regression(nu, tau) * theta.coeffs + d_tilde;
}

Vec6 kinematics_rate(const VesselState& state)
{
  return transform_jacobian(state.attitude()) * state.nu;
}

} // namespace fleetform
