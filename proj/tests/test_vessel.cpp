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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "test_support.hpp"

using namespace fleetform;

namespace
{

Mat3 skew(const Vec3& a)
{
  Mat3 s;
  s << 0, -a(2), a(1), a(2), 0, -a(0), -a(1), a(0), 0;
  return s;
}

// Reference rigid-body matrices of the diagonal-mass craft, assembled
// directly from the physical constants. Independent of theta_from_physical.
struct ReferenceModel
{
  Mat6 mass = Mat6::Zero();
  Mat6 damping = Mat6::Zero();

  explicit ReferenceModel(const PhysicalParams& p)
  {
    mass.diagonal() = p.effective_inertia();
    damping.diagonal().head<3>() = -p.damping_linear;
    damping.diagonal().tail<3>() = -p.damping_angular;
  }

  Mat6 coriolis(const Vec6& nu) const
  {
    const Vec3 m1v = mass.diagonal().head<3>().cwiseProduct(nu.head<3>());
    const Vec3 m2w = mass.diagonal().tail<3>().cwiseProduct(nu.tail<3>());
    Mat6 c = Mat6::Zero();
    c.topRightCorner<3, 3>() = -skew(m1v);
    c.bottomLeftCorner<3, 3>() = -skew(m1v);
    c.bottomRightCorner<3, 3>() = -skew(m2w);
    return c;
  }

  Vec6 acceleration(const Vec6& nu, const Vec6& tau) const
  {
    return mass.inverse() * (tau - coriolis(nu) * nu - damping * nu);
  }
};

} // namespace

TEST_CASE("transform jacobian basics")
{
  const Mat6 identity = transform_jacobian(Vec3::Zero());
  CHECK((identity - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  // yaw by pi/2 sends the body x axis to the Earth y axis
  const Mat6 j = transform_jacobian(Vec3(0, 0, std::numbers::pi / 2));
  Vec6 nu = Vec6::Zero();
  nu(0) = 1.0;
  const Vec6 rate = j * nu;
  CHECK(rate(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rate(1) == doctest::Approx(1.0));
  CHECK((j.bottomRightCorner<3, 3>() - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(transform_jacobian(Vec3(0, std::numbers::pi / 2, 0)), singularity_error);
  CHECK_THROWS_AS(transform_jacobian(Vec3(0, std::numbers::pi / 2 - 5e-4, 0)), singularity_error);
  CHECK_NOTHROW(transform_jacobian(Vec3(0, std::numbers::pi / 2 - 2e-3, 0)));
}

TEST_CASE("rotation block stays orthonormal")
{
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial)
  {
    const Vec3 eta2(testing::uniform(rng, -3.0, 3.0), testing::uniform(rng, -1.4, 1.4),
                    testing::uniform(rng, -3.0, 3.0));
    const Mat3 r = transform_jacobian(eta2).topLeftCorner<3, 3>();
    CHECK((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("transform jacobian rate")
{
  CHECK(transform_jacobian_rate(Vec3(0.3, 0.2, -0.4), Vec3::Zero()).cwiseAbs().maxCoeff() == 0.0);

  // pure yaw rate at zero attitude spins the rotation block in plane
  const Mat6 dj = transform_jacobian_rate(Vec3::Zero(), Vec3(0, 0, 1));
  CHECK(dj(0, 1) == doctest::Approx(-1.0));
  CHECK(dj(1, 0) == doctest::Approx(1.0));
  CHECK(dj(0, 0) == doctest::Approx(0.0));
  CHECK(dj.bottomRightCorner<3, 3>().cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial)
  {
    const Vec3 eta2(testing::uniform(rng, -2.5, 2.5), testing::uniform(rng, -1.2, 1.2),
                    testing::uniform(rng, -2.5, 2.5));
    const Vec3 eta2_dot(testing::uniform(rng, -2.0, 2.0), testing::uniform(rng, -2.0, 2.0),
                        testing::uniform(rng, -2.0, 2.0));
    const double h = 1e-6;
    const Mat6 fd =
        (transform_jacobian(eta2 + h * eta2_dot) - transform_jacobian(eta2 - h * eta2_dot)) /
        (2 * h);
    const Mat6 analytic = transform_jacobian_rate(eta2, eta2_dot);
    CHECK((analytic - fd).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("theta from physical constants")
{
  const ThetaVector theta = theta_from_physical(reference_vessel());
  CHECK(theta.damping(0) == doctest::Approx(-10.0 / 33.0).epsilon(1e-14));
  CHECK(theta.input(0) == doctest::Approx(1.0 / 33.0).epsilon(1e-14));
  CHECK(theta.input(1) == doctest::Approx(1.0 / 31.0).epsilon(1e-14));
  CHECK(theta.input(2) == doctest::Approx(1.0 / 33.0).epsilon(1e-14));
  CHECK(theta.input(3) == doctest::Approx(1.0 / 50.0).epsilon(1e-14));
  CHECK(theta.input(4) == doctest::Approx(1.0 / 55.0).epsilon(1e-14));
  CHECK(theta.input(5) == doctest::Approx(1.0 / 60.0).epsilon(1e-14));

  // equal effective linear masses: surge cross terms equal and opposite
  PhysicalParams balanced = reference_vessel();
  balanced.added_mass_linear = Vec3(-8.0, -8.0, -8.0);
  const ThetaVector sym = theta_from_physical(balanced);
  CHECK(sym.cross1(0) == doctest::Approx(-1.0));
  CHECK(sym.cross2(0) == doctest::Approx(1.0));

  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial)
  {
    PhysicalParams p;
    p.mass = testing::uniform(rng, 1.0, 100.0);
    p.inertia = Vec3::Constant(testing::uniform(rng, 1.0, 80.0));
    p.damping_linear = -Vec3::Constant(testing::uniform(rng, 0.0, 20.0));
    p.damping_angular = -Vec3::Constant(testing::uniform(rng, 0.0, 2.0));
    p.added_mass_linear = -Vec3::Constant(testing::uniform(rng, 0.0, 30.0));
    p.added_mass_angular = -Vec3::Constant(testing::uniform(rng, 0.0, 40.0));
    const ThetaVector th = theta_from_physical(p);
    for (int dof = 0; dof < 6; ++dof)
    {
      CHECK(th.input(dof) > 0.0);
    }
  }

  PhysicalParams sunk = reference_vessel();
  sunk.added_mass_linear(0) = 30.0; // "added mass" exceeding the mass
  CHECK_THROWS_AS(theta_from_physical(sunk), std::invalid_argument);

  PhysicalParams weightless = reference_vessel();
  weightless.mass = 0.0;
  CHECK_THROWS_AS(theta_from_physical(weightless), std::invalid_argument);

  PhysicalParams flat = reference_vessel();
  flat.inertia(1) = -2.0;
  CHECK_THROWS_AS(theta_from_physical(flat), std::invalid_argument);
}

TEST_CASE("regression sparsity pattern")
{
  CHECK(regression(Vec6::Zero(), Vec6::Zero()).cwiseAbs().maxCoeff() == 0.0);

  Vec6 surge_only = Vec6::Zero();
  surge_only(0) = 1.0;
  const RegressionMatrix psi = regression(surge_only, Vec6::Zero());
  for (int r = 0; r < 6; ++r)
  {
    for (int c = 0; c < 24; ++c)
    {
      if (r == 0 && c == 2)
      {
        CHECK(psi(r, c) == 1.0);
      }
      else
      {
        CHECK(psi(r, c) == 0.0);
      }
    }
  }

  const RegressionMatrix ones = regression(Vec6::Ones(), Vec6::Ones());
  for (int r = 0; r < 6; ++r)
  {
    for (int c = 0; c < 24; ++c)
    {
      CHECK(ones(r, c) == ((c >= 4 * r && c < 4 * r + 4) ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("regression form matches the rigid-body model")
{
  const PhysicalParams params = reference_vessel();
  const ReferenceModel model(params);
  const ThetaVector theta = theta_from_physical(params);

  std::mt19937 rng(123);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial)
  {
    Vec6 nu, tau;
    for (int k = 0; k < 6; ++k)
    {
      nu(k) = testing::uniform(rng, -5.0, 5.0);
      tau(k) = testing::uniform(rng, -5.0, 5.0);
    }
    const Vec6 via_regression = regression(nu, tau) * theta.coeffs;
    const Vec6 via_matrices = model.acceleration(nu, tau);
    worst = std::max(worst, (via_regression - via_matrices).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("plant acceleration")
{
  const ThetaVector theta = theta_from_physical(reference_vessel());
  CHECK(plant_acceleration(Vec6::Zero(), Vec6::Zero(), theta, Vec6::Zero()).cwiseAbs().maxCoeff() ==
        0.0);

  Vec6 tau = Vec6::Zero();
  tau(0) = 33.0;
  const Vec6 acc = plant_acceleration(Vec6::Zero(), tau, theta, Vec6::Zero());
  CHECK(acc(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(acc.tail<5>().cwiseAbs().maxCoeff() == 0.0);

  const Vec6 with_disturbance =
      plant_acceleration(Vec6::Zero(), Vec6::Zero(), theta, Vec6::Ones());
  CHECK((with_disturbance - Vec6::Ones()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kinematics rate")
{
  VesselState state;
  state.nu << 1, 2, 3, 0, 0, 0;
  CHECK((kinematics_rate(state) - state.nu).cwiseAbs().maxCoeff() < 1e-15);

  state.eta << 0, 0, 0, 0, 0, std::numbers::pi / 2;
  state.nu << 1, 0, 0, 0, 0, 0;
  const Vec6 rate = kinematics_rate(state);
  CHECK(rate(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rate(1) == doctest::Approx(1.0));
  CHECK(rate(2) == doctest::Approx(0.0).epsilon(1e-12));

  state.nu.setZero();
  CHECK(kinematics_rate(state).cwiseAbs().maxCoeff() == 0.0);
}
