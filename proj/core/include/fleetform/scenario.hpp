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

#ifndef FLEETFORM_SCENARIO_HPP
#define FLEETFORM_SCENARIO_HPP

#include <string>
#include <vector>

#include "fleetform/sim.hpp"

namespace fleetform
{

enum class TrajectoryKind
{
  constant, // hold a fixed position, zero rates
  exp_line  // (c0 (1 - e^-t), c1 t, c2 t), level attitude
};

/// A fully specified run: fleet, gains, reference, perturbations, and
/// integration settings. Parsed from the key-value format documented in
/// docs/scenario_format.md.
struct ScenarioConfig
{
  std::string name;
  ControllerKind controller = ControllerKind::blc;
  int n_vessels = 0;

  std::vector<Edge> edges;
  VecX reference_access;
  std::vector<std::pair<std::pair<int, int>, Vec3>> offsets; // position part of Delta_ij

  PhysicalParams vessel_params; // applied to every vessel
  EstimatorGains est_gains;
  ControlGains gains;

  TrajectoryKind trajectory = TrajectoryKind::constant;
  Vec3 trajectory_coeffs = Vec3::Zero();

  std::vector<Vec6> eta0;
  std::vector<Vec6> nu0;

  DisturbanceSpec disturbance;
  NoiseSpec noise;

  double dt = 1e-3;
  double horizon = 20.0;
  int record_every = 10;

  bool operator==(const ScenarioConfig& other) const;
};

/// Parses and fully validates a config; throws std::invalid_argument with
/// the offending line/field on any violation. Unknown keys are rejected.
ScenarioConfig parse_config(const std::string& text);

/// Reads a config file and parses it.
ScenarioConfig load_config(const std::string& path);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& cfg);

/// Re-checks every config invariant (also done by parse_config); returns
/// human-readable warnings for conditions that are suspicious but runnable,
/// e.g. a topology without full connectivity.
std::vector<std::string> validate_config(const ScenarioConfig& cfg);

/// The nine bundled setups: {scenario1, scenario2, scenario3} x
/// {blc, lc, lsmc}. scenario1 is the clean comparison, scenario2 adds the
/// sinusoidal current disturbance, scenario3 adds Gaussian measurement
/// noise.
std::vector<ScenarioConfig> builtin_scenarios();

/// Looks up "scenario1".."scenario3" (controller applied separately) or a
/// full builtin name like "scenario2_lsmc". Throws if unknown.
ScenarioConfig builtin_scenario(const std::string& name, ControllerKind controller);

/// Evaluates the configured reference trajectory at time t.
ReferenceSample sample_reference(const ScenarioConfig& cfg, double t);

/// Builds the immutable runtime context (topology, ground truth, gains,
/// reference closure) for a config.
SimContext make_context(const ScenarioConfig& cfg);

std::string to_string(ControllerKind kind);
ControllerKind controller_from_string(const std::string& s);

} // namespace fleetform

#endif // FLEETFORM_SCENARIO_HPP
