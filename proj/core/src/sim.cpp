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

#include "fleetform/sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fleetform/scenario.hpp"
#include "fleetform/trace.hpp"

namespace fleetform
{

namespace
{

double gaussian(std::mt19937_64& rng, double sigma)
{
  if (sigma == 0.0)
  {
    return 0.0;
  }
  std::normal_distribution<double> dist(0.0, sigma);
  return dist(rng);
}

// y + scale * rate, fieldwise over the dynamic states.
FleetState scaled_add(const FleetState& y, double scale, const FleetState& rate)
{
  FleetState out = y;
  for (size_t i = 0; i < y.vessels.size(); ++i)
  {
    out.vessels[i].vessel.eta += scale * rate.vessels[i].vessel.eta;
    out.vessels[i].vessel.nu += scale * rate.vessels[i].vessel.nu;
    out.vessels[i].estimator.v_hat += scale * rate.vessels[i].estimator.v_hat;
    out.vessels[i].estimator.theta_hat.coeffs += scale * rate.vessels[i].estimator.theta_hat.coeffs;
    out.vessels[i].neuro.vartheta += scale * rate.vessels[i].neuro.vartheta;
  }
  return out;
}

void accumulate(FleetState& acc, double w, const FleetState& rate)
{
  for (size_t i = 0; i < acc.vessels.size(); ++i)
  {
    acc.vessels[i].vessel.eta += w * rate.vessels[i].vessel.eta;
    acc.vessels[i].vessel.nu += w * rate.vessels[i].vessel.nu;
    acc.vessels[i].estimator.v_hat += w * rate.vessels[i].estimator.v_hat;
    acc.vessels[i].estimator.theta_hat.coeffs += w * rate.vessels[i].estimator.theta_hat.coeffs;
    acc.vessels[i].neuro.vartheta += w * rate.vessels[i].neuro.vartheta;
  }
}

FleetState rk4_substep(const FleetState& fs, double t0, double h, const SimContext& ctx,
                       const StepInputs& inputs)
{
  const FleetState k1 = fleet_derivative(fs, t0, ctx, inputs);
  const FleetState k2 = fleet_derivative(scaled_add(fs, h / 2.0, k1), t0 + h / 2.0, ctx, inputs);
  const FleetState k3 = fleet_derivative(scaled_add(fs, h / 2.0, k2), t0 + h / 2.0, ctx, inputs);
  const FleetState k4 = fleet_derivative(scaled_add(fs, h, k3), t0 + h, ctx, inputs);

  FleetState next = fs;
  accumulate(next, h / 6.0, k1);
  accumulate(next, h / 3.0, k2);
  accumulate(next, h / 3.0, k3);
  accumulate(next, h / 6.0, k4);
  next.t = t0 + h;
  return next;
}

bool vessel_state_sane(const VesselSimState& vs)
{
  const auto finite_and_bounded = [](const auto& v) {
    return v.allFinite() && v.norm() <= kDivergenceLimit;
  };
  return finite_and_bounded(vs.vessel.eta) && finite_and_bounded(vs.vessel.nu) &&
         finite_and_bounded(vs.estimator.v_hat) &&
         finite_and_bounded(vs.estimator.theta_hat.coeffs) &&
         finite_and_bounded(vs.neuro.vartheta);
}

bool fleet_sane(const FleetState& fs)
{
  return std::all_of(fs.vessels.begin(), fs.vessels.end(), vessel_state_sane);
}

} // namespace

Vec6 disturbance_signal(double t, const DisturbanceSpec& spec)
{
  if (spec.kind == DisturbanceKind::none)
  {
    return Vec6::Zero();
  }
  const double s = std::sin(spec.omega * t);
  const double c = std::cos(spec.omega * t);
  Vec6 d;
  d << spec.amplitudes(0) * s, spec.amplitudes(1) * c, spec.amplitudes(2) * s,
      spec.amplitudes(3) * s, spec.amplitudes(4) * c, spec.amplitudes(5) * s;
  return d;
}

VesselState measure(const VesselState& state, const NoiseSpec& spec, std::mt19937_64& rng)
{
  if (spec.kind == NoiseKind::none)
  {
    return state;
  }
  VesselState noisy = state;
  for (int k = 0; k < 6; ++k)
  {
    noisy.eta(k) += gaussian(rng, spec.sigma_eta(k));
  }
  for (int k = 0; k < 6; ++k)
  {
    noisy.nu(k) += gaussian(rng, spec.sigma_v(k));
  }
  return noisy;
}

NeighborhoodView build_view(int i, const SimContext& ctx,
                            const std::vector<VesselState>& measured, const ReferenceSample& ref)
{
  NeighborhoodView view;
  view.self = measured[i];
  view.self_rate = kinematics_rate(measured[i]);
  view.b_weight = ctx.topology.reference_access(i);
  view.desired = ref;
  for (const int j : ctx.topology.neighbors_of(i))
  {
    NeighborInfo nb;
    nb.index = j;
    nb.eta = measured[j].eta;
    nb.eta_rate = kinematics_rate(measured[j]);
    nb.offset = ctx.offsets.get(i, j);
    nb.weight = ctx.topology.adjacency(i, j);
    view.neighbors.push_back(nb);
  }
  return view;
}

StepInputs compute_step_inputs(const FleetState& fs, const SimContext& ctx, std::mt19937_64& rng)
{
  const int n = static_cast<int>(fs.vessels.size());
  StepInputs inputs;
  inputs.measured.resize(n);
  inputs.noise_v.assign(n, Vec6::Zero());
  inputs.controls.resize(n);

  for (int i = 0; i < n; ++i)
  {
    inputs.measured[i] = measure(fs.vessels[i].vessel, ctx.noise, rng);
    inputs.noise_v[i] = inputs.measured[i].nu - fs.vessels[i].vessel.nu;
  }

  const ReferenceSample ref = ctx.reference(fs.t);
  for (int i = 0; i < n; ++i)
  {
    const NeighborhoodView view = build_view(i, ctx, inputs.measured, ref);
    switch (ctx.controller)
    {
      case ControllerKind::blc:
        inputs.controls[i] = blc_control(view, fs.vessels[i].estimator, fs.vessels[i].neuro,
                                         ctx.gains);
        break;
      case ControllerKind::lc:
        inputs.controls[i] = lc_control(view, fs.vessels[i].estimator, ctx.gains);
        break;
      case ControllerKind::lsmc:
        inputs.controls[i] = lsmc_control(view, fs.vessels[i].estimator, ctx.gains);
        break;
    }
  }
  return inputs;
}

FleetState fleet_derivative(const FleetState& fs, double t, const SimContext& ctx,
                            const StepInputs& inputs)
{
  const int n = static_cast<int>(fs.vessels.size());
  FleetState rate = fs;
  const Vec6 disturbance = disturbance_signal(t, ctx.disturbance);

  for (int i = 0; i < n; ++i)
  {
    const VesselSimState& vs = fs.vessels[i];
    VesselSimState& out = rate.vessels[i];
    const Vec6& tau = inputs.controls[i].tau;

    out.vessel.eta = kinematics_rate(vs.vessel);
    const Vec6 d_tilde = ctx.inv_effective_inertia[i].cwiseProduct(disturbance);
    out.vessel.nu = plant_acceleration(vs.vessel.nu, tau, ctx.theta_true[i], d_tilde);

    // The observer is supervised by the measured velocity: the current true
    // velocity plus the offset held for this step.
    const Vec6 v_meas = vs.vessel.nu + inputs.noise_v[i];
    const EstimatorRates est = estimator_rates(vs.estimator, v_meas, regression(v_meas, tau),
                                               ctx.est_gains);
    out.estimator.v_hat = est.v_hat_dot;
    out.estimator.theta_hat.coeffs = est.theta_dot;

    if (ctx.controller == ControllerKind::blc)
    {
      out.neuro.vartheta = shunting_rate(vs.neuro, inputs.controls[i].z, ctx.gains.shunting);
    }
    else
    {
      out.neuro.vartheta.setZero();
    }
  }
  return rate;
}

int stability_substeps(const FleetState& fs, double dt, const SimContext& ctx,
                       const StepInputs& inputs)
{
  // Fastest mode of the coupled step: the observer/adaptation pair
  // oscillates at about sqrt(P) * ||psi|| under a held torque, on top of the
  // observer decay L and the shunting decay a + |z|.
  const double p_max = ctx.est_gains.adaptation.maxCoeff();
  const double l_max = ctx.est_gains.observer.maxCoeff();
  double rate = l_max + ctx.gains.shunting.a;
  for (size_t i = 0; i < fs.vessels.size(); ++i)
  {
    const RegressionMatrix psi = regression(inputs.measured[i].nu, inputs.controls[i].tau);
    const double psi_rate = std::sqrt(p_max) * psi.norm();
    const double z_rate = inputs.controls[i].z.cwiseAbs().maxCoeff();
    // velocity products also stiffen the plant itself once |v| gets large
    const double plant_rate = ctx.theta_true[i].coeffs.cwiseAbs().maxCoeff() *
                              inputs.measured[i].nu.cwiseAbs().maxCoeff();
    rate = std::max(rate, l_max + psi_rate + z_rate + plant_rate);
  }
  const double needed = dt * rate / 2.0;
  if (!(needed > 1.0))
  {
    return 1;
  }
  return static_cast<int>(std::min(std::ceil(needed), 100000.0));
}

FleetState rk4_step(const FleetState& fs, double dt, const SimContext& ctx,
                    const StepInputs& inputs)
{
  const int n_sub = stability_substeps(fs, dt, ctx, inputs);
  const double h = dt / n_sub;
  FleetState state = fs;
  for (int s = 0; s < n_sub; ++s)
  {
    state = rk4_substep(state, fs.t + s * h, h, ctx, inputs);
  }
  state.t = fs.t + dt;
  return state;
}

FleetState initial_fleet(const ScenarioConfig& cfg)
{
  FleetState fs;
  fs.t = 0.0;
  fs.vessels.resize(cfg.n_vessels);
  for (int i = 0; i < cfg.n_vessels; ++i)
  {
    fs.vessels[i].vessel.eta = cfg.eta0[i];
    fs.vessels[i].vessel.nu = cfg.nu0[i];
    fs.vessels[i].estimator.v_hat = cfg.nu0[i];
    fs.vessels[i].estimator.theta_hat.coeffs.setZero();
    fs.vessels[i].neuro.vartheta.setZero();
  }
  return fs;
}

SimTrace run_scenario(const ScenarioConfig& cfg)
{
  const SimContext ctx = make_context(cfg);
  std::mt19937_64 rng(cfg.noise.seed);

  SimTrace trace;
  trace.config = cfg;
  trace.verdict = Verdict::completed;

  FleetState fs = initial_fleet(cfg);
  const long n_steps = std::lround(cfg.horizon / cfg.dt);

  const auto record = [&](const FleetState& state, const StepInputs& inputs) {
    TraceRow row;
    row.t = state.t;
    row.vessels.resize(state.vessels.size());
    for (size_t i = 0; i < state.vessels.size(); ++i)
    {
      VesselRecord& r = row.vessels[i];
      r.eta = state.vessels[i].vessel.eta;
      r.nu = state.vessels[i].vessel.nu;
      r.error = inputs.controls[i].error;
      r.z = inputs.controls[i].z;
      r.vartheta = state.vessels[i].neuro.vartheta;
      r.tau = inputs.controls[i].tau;
      const auto [obs, param] = estimation_diagnostics(
          state.vessels[i].estimator, state.vessels[i].vessel.nu, ctx.theta_true[i]);
      r.obs_error_norm = obs;
      r.param_error_norm = param;
    }
    trace.rows.push_back(std::move(row));
  };

  for (long k = 0; k <= n_steps; ++k)
  {
    fs.t = k * cfg.dt;
    StepInputs inputs;
    try
    {
      inputs = compute_step_inputs(fs, ctx, rng);
    }
    catch (const singularity_error& err)
    {
      trace.verdict = Verdict::diverged;
      trace.halt_reason = err.what();
      break;
    }

    if (k == 0)
    {
      // The observer starts on the first measured velocity.
      for (size_t i = 0; i < fs.vessels.size(); ++i)
      {
        fs.vessels[i].estimator.v_hat = inputs.measured[i].nu;
      }
    }
    if (k % cfg.record_every == 0 || k == n_steps)
    {
      record(fs, inputs);
    }
    if (k == n_steps)
    {
      break;
    }

    try
    {
      fs = rk4_step(fs, cfg.dt, ctx, inputs);
    }
    catch (const singularity_error& err)
    {
      trace.verdict = Verdict::diverged;
      trace.halt_reason = err.what();
      break;
    }
    if (!fleet_sane(fs))
    {
      trace.verdict = Verdict::diverged;
      trace.halt_reason = "state norm exceeded " + std::to_string(kDivergenceLimit) +
                          " at t=" + std::to_string(fs.t);
      break;
    }
  }
  return trace;
}

} // namespace fleetform
