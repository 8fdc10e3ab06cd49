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

#ifndef FLEETFORM_SIM_HPP
#define FLEETFORM_SIM_HPP

#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "fleetform/control.hpp"
#include "fleetform/estimator.hpp"
#include "fleetform/shunting.hpp"
#include "fleetform/topology.hpp"
#include "fleetform/vessel.hpp"

namespace fleetform
{

/// Any state norm beyond this halts a run with a "diverged" verdict.
inline constexpr double kDivergenceLimit = 1e6;

enum class ControllerKind
{
  blc,
  lc,
  lsmc
};

enum class DisturbanceKind
{
  none,
  sinusoidal
};

/// Ocean-current style force/torque disturbance with the fixed phase
/// pattern (sin, cos, sin, sin, cos, sin).
struct DisturbanceSpec
{
  DisturbanceKind kind = DisturbanceKind::none;
  Vec6 amplitudes = Vec6::Zero(); // N and N*m
  double omega = 1.0;             // rad/s
};

enum class NoiseKind
{
  none,
  gaussian
};

struct NoiseSpec
{
  NoiseKind kind = NoiseKind::none;
  Vec6 sigma_eta = Vec6::Zero(); // m, rad
  Vec6 sigma_v = Vec6::Zero();   // m/s, rad/s
  std::uint64_t seed = 0;
};

/// Force-level disturbance sample at time t.
Vec6 disturbance_signal(double t, const DisturbanceSpec& spec);

/// State plus independent zero-mean Gaussian perturbations per channel;
/// identity (no generator draws) when kind is none.
VesselState measure(const VesselState& state, const NoiseSpec& spec, std::mt19937_64& rng);

/// Formation offsets Delta_ij, zero where unset.
class OffsetTable
{
public:
  void set(int i, int j, const Vec6& delta) { table_[{i, j}] = delta; }
  Vec6 get(int i, int j) const
  {
    const auto it = table_.find({i, j});
    return it == table_.end() ? Vec6::Zero() : it->second;
  }

private:
  std::map<std::pair<int, int>, Vec6> table_;
};

/// Per-vessel dynamic state of the coupled fleet ODE.
struct VesselSimState
{
  VesselState vessel;
  EstimatorState estimator;
  NeuroState neuro;
};

struct FleetState
{
  double t = 0.0;
  std::vector<VesselSimState> vessels;
};

/// Everything a run needs besides the evolving state. Ground-truth
/// parameters live here; controllers only ever see estimates.
struct SimContext
{
  Topology topology;
  std::vector<ThetaVector> theta_true;
  std::vector<Vec6> inv_effective_inertia; // maps force disturbance to acceleration
  ControllerKind controller = ControllerKind::blc;
  EstimatorGains est_gains;
  ControlGains gains;
  DisturbanceSpec disturbance;
  NoiseSpec noise;
  OffsetTable offsets;
  std::function<ReferenceSample(double)> reference;
};

/// Quantities sampled once at the start of an integration step and held
/// constant across it: noisy measurements and the controls computed from
/// them.
struct StepInputs
{
  std::vector<VesselState> measured;
  std::vector<Vec6> noise_v; // measurement offsets, reapplied at every stage
  std::vector<ControlOutput> controls;
};

/// The neighbors-only snapshot vessel i sees. Non-neighbor state cannot
/// leak in: only edges with positive weight contribute entries.
NeighborhoodView build_view(int i, const SimContext& ctx,
                            const std::vector<VesselState>& measured,
                            const ReferenceSample& ref);

/// Samples measurements, builds views, evaluates the configured control law
/// for every vessel.
StepInputs compute_step_inputs(const FleetState& fs, const SimContext& ctx, std::mt19937_64& rng);

/// One evaluation of the coupled right-hand side (plants, estimators,
/// shunting filters) at time t with the held step inputs. The result reuses
/// FleetState as a rate container; its t field is unused.
FleetState fleet_derivative(const FleetState& fs, double t, const SimContext& ctx,
                            const StepInputs& inputs);

/// Advances the fleet one control interval with classical RK4. The interval
/// is internally split into equal substeps when the estimator's stiffness
/// (regressor magnitude under the held torque) demands it; the split is a
/// deterministic function of the step-start state.
FleetState rk4_step(const FleetState& fs, double dt, const SimContext& ctx,
                    const StepInputs& inputs);

/// Number of substeps rk4_step will use for this interval.
int stability_substeps(const FleetState& fs, double dt, const SimContext& ctx,
                       const StepInputs& inputs);

struct ScenarioConfig;
struct SimTrace;

/// Initial fleet state for a config: poses and velocities as configured,
/// observer started on the first measured velocity, zero parameter
/// estimates, zero activities.
FleetState initial_fleet(const ScenarioConfig& cfg);

/// Integrates a configured scenario from t = 0 to the horizon, recording
/// every record_every-th step. Deterministic for a fixed seed.
SimTrace run_scenario(const ScenarioConfig& cfg);

} // namespace fleetform

#endif // FLEETFORM_SIM_HPP
