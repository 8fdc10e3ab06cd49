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

#ifndef FLEETFORM_METRICS_HPP
#define FLEETFORM_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fleetform/trace.hpp"

namespace fleetform
{

/// Per-vessel summary numbers of one run.
struct VesselMetrics
{
  std::optional<double> settle_time; // first t after which ||e|| stays below threshold
  double error_rms_tail = 0.0;       // RMS of ||e|| over the final quarter of the trace
  double error_peak = 0.0;
  double control_total_variation = 0.0; // sum over rows of ||tau_k+1 - tau_k||_1
  double max_abs_activity = 0.0;        // max |vartheta| seen
  double final_obs_error = 0.0;
  double final_param_error = 0.0;
};

struct Metrics
{
  Verdict verdict = Verdict::completed;
  double settle_threshold = 0.1;
  std::vector<VesselMetrics> vessels;
};

/// Summarizes a (completed or diverged) trace; throws on an empty one.
Metrics compute_metrics(const SimTrace& trace, double settle_threshold = 0.1);

/// Plain-text table for terminal output.
std::string format_metrics(const Metrics& m);

} // namespace fleetform

#endif // FLEETFORM_METRICS_HPP
