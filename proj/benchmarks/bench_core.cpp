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

#include <benchmark/benchmark.h>

#include <random>

#include "fleetform/control.hpp"
#include "fleetform/scenario.hpp"
#include "fleetform/sim.hpp"
#include "fleetform/trace.hpp"

using namespace fleetform;

namespace
{

Vec6 random_vec6(std::mt19937& rng, double scale)
{
  std::uniform_real_distribution<double> dist(-scale, scale);
  Vec6 v;
  for (int k = 0; k < 6; ++k)
  {
    v(k) = dist(rng);
  }
  return v;
}

void BM_regression(benchmark::State& state)
{
  std::mt19937 rng(1);
  const Vec6 nu = random_vec6(rng, 2.0);
  const Vec6 tau = random_vec6(rng, 50.0);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(regression(nu, tau));
  }
}
BENCHMARK(BM_regression);

void BM_transform_jacobian(benchmark::State& state)
{
  const Vec3 eta2(0.2, -0.3, 1.1);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(transform_jacobian(eta2));
  }
}
BENCHMARK(BM_transform_jacobian);

void BM_estimator_rates(benchmark::State& state)
{
  std::mt19937 rng(2);
  EstimatorState est;
  est.theta_hat = theta_from_physical(reference_vessel());
  est.v_hat = random_vec6(rng, 1.0);
  const Vec6 v = random_vec6(rng, 1.0);
  const RegressionMatrix psi = regression(v, random_vec6(rng, 40.0));
  EstimatorGains gains;
  gains.observer = Vec6::Constant(100.0);
  gains.adaptation = Vec6::Constant(0.1);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(estimator_rates(est, v, psi, gains));
  }
}
BENCHMARK(BM_estimator_rates);

void BM_blc_control(benchmark::State& state)
{
  const ScenarioConfig cfg = builtin_scenario("scenario1", ControllerKind::blc);
  const SimContext ctx = make_context(cfg);
  std::vector<VesselState> measured(4);
  for (int i = 0; i < 4; ++i)
  {
    measured[i].eta = cfg.eta0[i];
  }
  const NeighborhoodView view = build_view(1, ctx, measured, ctx.reference(0.5));
  EstimatorState est;
  est.theta_hat = theta_from_physical(cfg.vessel_params);
  const NeuroState neuro;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(blc_control(view, est, neuro, ctx.gains));
  }
}
BENCHMARK(BM_blc_control);

void BM_rk4_step_fleet(benchmark::State& state)
{
  const ScenarioConfig cfg = builtin_scenario("scenario1", ControllerKind::blc);
  const SimContext ctx = make_context(cfg);
  std::mt19937_64 rng(3);
  FleetState fs = initial_fleet(cfg);
  // move past the stiff startup so the step cost is representative
  for (int k = 0; k < 2000; ++k)
  {
    fs.t = k * cfg.dt;
    fs = rk4_step(fs, cfg.dt, ctx, compute_step_inputs(fs, ctx, rng));
  }
  const StepInputs inputs = compute_step_inputs(fs, ctx, rng);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(rk4_step(fs, cfg.dt, ctx, inputs));
  }
}
BENCHMARK(BM_rk4_step_fleet);

void BM_scenario1_one_second(benchmark::State& state)
{
  ScenarioConfig cfg = builtin_scenario("scenario1", ControllerKind::blc);
  cfg.horizon = 1.0;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(run_scenario(cfg));
  }
}
BENCHMARK(BM_scenario1_one_second)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
