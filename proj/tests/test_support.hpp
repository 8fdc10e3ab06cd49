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

#ifndef FLEETFORM_TESTS_TEST_SUPPORT_HPP
#define FLEETFORM_TESTS_TEST_SUPPORT_HPP

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "fleetform/control.hpp"
#include "fleetform/estimator.hpp"
#include "fleetform/topology.hpp"
#include "fleetform/vessel.hpp"

namespace fleetform::testing
{

inline double uniform(std::mt19937& rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random connected topology: a random spanning tree plus a few extra edges,
/// weights in (0.1, 5].
inline Topology random_connected_topology(std::mt19937& rng, int n, bool force_reference = true)
{
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
  {
    const int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({parent, v, uniform(rng, 0.1, 5.0)});
  }
  const int extras = n >= 3 ? std::uniform_int_distribution<int>(0, n - 2)(rng) : 0;
  for (int k = 0; k < extras; ++k)
  {
    const int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (i == j)
    {
      continue;
    }
    bool present = false;
    for (const Edge& e : edges)
    {
      if ((e.i == i && e.j == j) || (e.i == j && e.j == i))
      {
        present = true;
        break;
      }
    }
    if (!present)
    {
      edges.push_back({i, j, uniform(rng, 0.1, 5.0)});
    }
  }
  VecX b = VecX::Zero(n);
  for (int i = 0; i < n; ++i)
  {
    if (uniform(rng, 0.0, 1.0) < 0.5)
    {
      b(i) = uniform(rng, 0.1, 2.0);
    }
  }
  if (force_reference && b.maxCoeff() <= 0.0)
  {
    b(std::uniform_int_distribution<int>(0, n - 1)(rng)) = uniform(rng, 0.1, 2.0);
  }
  return build_topology(edges, b, n);
}

/// Multi-band identification torque: strong slow surge/sway/heave tones for
/// the damping directions plus strong paired angular tones for the
/// velocity-coupling directions. Persistently exciting on all six channels.
inline Vec6 identification_torque(double t)
{
  constexpr double lin = 600.0, fast = 240.0, ang = 1500.0, fm = 2.0;
  Vec6 tau;
  tau(0) = lin * std::sin(0.31 * t) + fast * std::sin(1.73 * t + 0.4);
  tau(1) = lin * std::sin(0.37 * t + 2.0) + fast * std::sin(2.11 * t + 1.3);
  tau(2) = lin * std::sin(0.43 * t + 4.0) + fast * std::sin(2.51 * t + 2.2);
  tau(3) = ang * (std::sin(fm * 1.13 * t + 0.7) + 0.7 * std::sin(fm * 2.93 * t));
  tau(4) = ang * (std::sin(fm * 1.31 * t + 1.9) + 0.7 * std::sin(fm * 3.31 * t + 0.9));
  tau(5) = ang * (std::sin(fm * 1.51 * t + 3.1) + 0.7 * std::sin(fm * 3.67 * t + 1.8));
  return tau;
}

/// Single-vessel plant + estimator trajectory under a torque signal,
/// integrated with plain RK4. Returns per-step (obs_error, V1) samples.
struct IdentificationRun
{
  Vec6 v = Vec6::Zero();
  Vec6 v_hat = Vec6::Zero();
  Vec24 theta = Vec24::Zero();
  std::vector<double> obs_error;
  std::vector<double> lyapunov;
};

template <typename TorqueFn>
IdentificationRun run_identification(const TorqueFn& torque, const EstimatorGains& gains,
                                     const ThetaVector& theta_true, double horizon, double dt,
                                     const Vec6& d_tilde = Vec6::Zero())
{
  IdentificationRun run;
  const double p_iso = gains.adaptation(0);

  struct State
  {
    Vec6 v, v_hat;
    Vec24 theta;
  };
  State y{run.v, run.v_hat, run.theta};
  const auto deriv = [&](double t, const State& s) {
    const Vec6 tau = torque(t);
    State d;
    d.v = plant_acceleration(s.v, tau, theta_true, d_tilde);
    const EstimatorState est{s.v_hat, ThetaVector{s.theta}};
    const EstimatorRates r = estimator_rates(est, s.v, regression(s.v, tau), gains);
    d.v_hat = r.v_hat_dot;
    d.theta = r.theta_dot;
    return d;
  };
  const auto axpy = [](const State& a, double h, const State& b) {
    return State{a.v + h * b.v, a.v_hat + h * b.v_hat, a.theta + h * b.theta};
  };

  const long n = std::lround(horizon / dt);
  run.obs_error.reserve(n + 1);
  run.lyapunov.reserve(n + 1);
  const auto sample = [&](const State& s) {
    run.obs_error.push_back((s.v_hat - s.v).norm());
    run.lyapunov.push_back(0.5 * p_iso * (s.v_hat - s.v).squaredNorm() +
                           0.5 * (s.theta - theta_true.coeffs).squaredNorm());
  };
  sample(y);
  for (long k = 0; k < n; ++k)
  {
    const double t = k * dt;
    const State k1 = deriv(t, y);
    const State k2 = deriv(t + dt / 2, axpy(y, dt / 2, k1));
    const State k3 = deriv(t + dt / 2, axpy(y, dt / 2, k2));
    const State k4 = deriv(t + dt, axpy(y, dt, k3));
    y.v += dt / 6 * (k1.v + 2 * k2.v + 2 * k3.v + k4.v);
    y.v_hat += dt / 6 * (k1.v_hat + 2 * k2.v_hat + 2 * k3.v_hat + k4.v_hat);
    y.theta += dt / 6 * (k1.theta + 2 * k2.theta + 2 * k3.theta + k4.theta);
    sample(y);
  }
  run.v = y.v;
  run.v_hat = y.v_hat;
  run.theta = y.theta;
  return run;
}

/// Analytic time-parameterized neighborhood for vessel 0 of a two-vessel
/// pair: smooth poses, consistent rates, smooth reference. Used to check
/// analytic controller derivatives against finite differences.
inline NeighborhoodView synthetic_view(double t)
{
  const auto self_eta = [](double s) {
    Vec6 eta;
    eta << 2.0 * std::sin(0.4 * s), 1.5 * std::cos(0.3 * s), 0.8 * std::sin(0.5 * s + 1.0),
        0.25 * std::sin(0.7 * s), 0.2 * std::sin(0.6 * s + 0.5), 0.3 * std::cos(0.45 * s);
    return eta;
  };
  const auto self_eta_dot = [](double s) {
    Vec6 d;
    d << 0.8 * std::cos(0.4 * s), -0.45 * std::sin(0.3 * s), 0.4 * std::cos(0.5 * s + 1.0),
        0.175 * std::cos(0.7 * s), 0.12 * std::cos(0.6 * s + 0.5), -0.135 * std::sin(0.45 * s);
    return d;
  };
  const auto nb_eta = [](double s) {
    Vec6 eta;
    eta << 1.0 + std::sin(0.35 * s + 0.3), -2.0 + 0.5 * std::cos(0.55 * s), 0.6 * std::sin(0.25 * s),
        0.15 * std::cos(0.5 * s), 0.1 * std::sin(0.4 * s + 1.2), 0.2 * std::sin(0.3 * s);
    return eta;
  };
  const auto nb_eta_dot = [](double s) {
    Vec6 d;
    d << 0.35 * std::cos(0.35 * s + 0.3), -0.275 * std::sin(0.55 * s), 0.15 * std::cos(0.25 * s),
        -0.075 * std::sin(0.5 * s), 0.04 * std::cos(0.4 * s + 1.2), 0.06 * std::cos(0.3 * s);
    return d;
  };

  NeighborhoodView view;
  view.self.eta = self_eta(t);
  view.self_rate = self_eta_dot(t);
  view.self.nu = transform_jacobian(view.self.attitude()).inverse() * view.self_rate;

  NeighborInfo nb;
  nb.index = 1;
  nb.eta = nb_eta(t);
  nb.eta_rate = nb_eta_dot(t);
  nb.offset = (Vec6() << 0.0, 3.0, 0.0, 0.0, 0.0, 0.0).finished();
  nb.weight = 1.3;
  view.neighbors.push_back(nb);

  view.b_weight = 0.8;
  view.desired.eta_d << 10.0 * (1.0 - std::exp(-0.2 * t)), 2.0 * t, 0.5 * std::sin(0.3 * t), 0, 0,
      0;
  view.desired.eta_d_rate << 2.0 * std::exp(-0.2 * t), 2.0, 0.15 * std::cos(0.3 * t), 0, 0, 0;
  view.desired.eta_d_accel << -0.4 * std::exp(-0.2 * t), 0.0, -0.045 * std::sin(0.3 * t), 0, 0, 0;
  return view;
}

} // namespace fleetform::testing

#endif // FLEETFORM_TESTS_TEST_SUPPORT_HPP
