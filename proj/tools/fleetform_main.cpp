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

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

#include "fleetform/metrics.hpp"
#include "fleetform/scenario.hpp"
#include "fleetform/sim.hpp"
#include "fleetform/trace.hpp"

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiverged = 2;

fleetform::ScenarioConfig resolve_scenario(const std::string& name_or_path,
                                           const std::string& controller, bool controller_given)
{
  using namespace fleetform;
  const ControllerKind kind = controller_from_string(controller);
  if (std::filesystem::exists(name_or_path))
  {
    ScenarioConfig cfg = load_config(name_or_path);
    if (controller_given)
    {
      cfg.controller = kind;
    }
    return cfg;
  }
  if (controller_given && name_or_path.find('_') != std::string::npos &&
      name_or_path.substr(name_or_path.find('_') + 1) != controller)
  {
    throw std::invalid_argument("scenario '" + name_or_path +
                                "' names a controller that contradicts --controller " +
                                controller);
  }
  return builtin_scenario(name_or_path, kind);
}

int run_command(const std::string& scenario, const std::string& controller, bool controller_given,
                const std::string& out_dir, double dt, double horizon, std::uint64_t seed,
                bool seed_given, double noise_sigma, bool noise_given, double disturbance_scale)
{
  using namespace fleetform;
  ScenarioConfig cfg = resolve_scenario(scenario, controller, controller_given);
  if (dt > 0.0)
  {
    cfg.dt = dt;
  }
  if (horizon >= 0.0)
  {
    cfg.horizon = horizon;
  }
  if (seed_given)
  {
    cfg.noise.seed = seed;
  }
  if (noise_given)
  {
    cfg.noise.sigma_eta = Vec6::Constant(noise_sigma);
    cfg.noise.sigma_v = Vec6::Constant(noise_sigma);
    cfg.noise.kind = noise_sigma > 0.0 ? NoiseKind::gaussian : NoiseKind::none;
  }
  if (disturbance_scale != 1.0)
  {
    cfg.disturbance.amplitudes *= disturbance_scale;
  }

  for (const std::string& warning : validate_config(cfg))
  {
    std::fprintf(stderr, "warning: %s\n", warning.c_str());
  }

  const SimTrace trace = run_scenario(cfg);

  std::filesystem::create_directories(out_dir);
  const std::string suffix = "_" + to_string(cfg.controller);
  std::string stem = cfg.name;
  if (stem.size() < suffix.size() ||
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) != 0)
  {
    stem += suffix;
  }
  const std::string path = (std::filesystem::path(out_dir) / (stem + ".csv")).string();
  write_trace(trace, path);

  std::printf("scenario:   %s (%s)\n", cfg.name.c_str(), to_string(cfg.controller).c_str());
  std::printf("verdict:    %s\n", to_string(trace.verdict).c_str());
  if (!trace.halt_reason.empty())
  {
    std::printf("halted:     %s\n", trace.halt_reason.c_str());
  }
  std::printf("trace:      %s (%zu rows)\n", path.c_str(), trace.rows.size());
  std::printf("%s", format_metrics(compute_metrics(trace)).c_str());
  return trace.verdict == Verdict::completed ? kExitOk : kExitDiverged;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Distributed consensus formation tracking simulator for 6-DOF vessels"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Integrate a scenario and write its trace");
  std::string scenario;
  std::string controller = "blc";
  std::string out_dir = ".";
  double dt = -1.0, horizon = -1.0, noise_sigma = 0.0, disturbance_scale = 1.0;
  std::uint64_t seed = 0;
  run->add_option("--scenario", scenario, "Bundled name (scenario1..3) or config file path")
      ->required();
  auto* controller_opt =
      run->add_option("--controller", controller, "blc, lc, or lsmc")->capture_default_str();
  run->add_option("--out", out_dir, "Output directory for trace + sidecar")
      ->capture_default_str();
  run->add_option("--dt", dt, "Override integration step [s]");
  run->add_option("--horizon", horizon, "Override run length [s]");
  auto* seed_opt = run->add_option("--seed", seed, "Override the noise seed");
  auto* noise_opt =
      run->add_option("--noise-sigma", noise_sigma, "Set all measurement sigmas to this value");
  run->add_option("--disturbance-scale", disturbance_scale,
                  "Multiply disturbance amplitudes")
      ->capture_default_str();

  // list-scenarios
  auto* list = app.add_subcommand("list-scenarios", "Print the bundled scenario names");

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Summarize a stored trace");
  std::string trace_path;
  double settle_threshold = 0.1;
  metrics_cmd->add_option("--trace", trace_path, "Trace CSV written by 'run'")->required();
  metrics_cmd->add_option("--settle-threshold", settle_threshold, "Error norm threshold")
      ->capture_default_str();

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a configuration file");
  std::string config_path;
  validate_cmd->add_option("--config", config_path, "Configuration file")->required();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return kExitUsage;
  }

  try
  {
    if (run->parsed())
    {
      return run_command(scenario, controller, controller_opt->count() > 0, out_dir, dt, horizon,
                         seed, seed_opt->count() > 0, noise_sigma, noise_opt->count() > 0,
                         disturbance_scale);
    }
    if (list->parsed())
    {
      for (const fleetform::ScenarioConfig& cfg : fleetform::builtin_scenarios())
      {
        std::printf("%s\n", cfg.name.c_str());
      }
      return kExitOk;
    }
    if (metrics_cmd->parsed())
    {
      const fleetform::SimTrace trace = fleetform::read_trace(trace_path);
      std::printf("%s", format_metrics(fleetform::compute_metrics(trace, settle_threshold)).c_str());
      return kExitOk;
    }
    if (validate_cmd->parsed())
    {
      const fleetform::ScenarioConfig cfg = fleetform::load_config(config_path);
      const auto warnings = fleetform::validate_config(cfg);
      for (const std::string& w : warnings)
      {
        std::fprintf(stderr, "warning: %s\n", w.c_str());
      }
      std::printf("%s: ok (%s, %d vessels)%s\n", config_path.c_str(), cfg.name.c_str(),
                  cfg.n_vessels, warnings.empty() ? "" : " with warnings");
      return kExitOk;
    }
  }
  catch (const std::exception& e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
