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

#ifndef FLEETFORM_TRACE_HPP
#define FLEETFORM_TRACE_HPP

#include <string>
#include <vector>

#include "fleetform/scenario.hpp"

namespace fleetform
{

enum class Verdict
{
  completed,
  diverged
};

/// One recorded instant for one vessel.
struct VesselRecord
{
  Vec6 eta = Vec6::Zero();
  Vec6 nu = Vec6::Zero();
  Vec6 error = Vec6::Zero();     // consensus error e_i
  Vec6 z = Vec6::Zero();         // auxiliary variable
  Vec6 vartheta = Vec6::Zero();  // shunting activities (zero for lc/lsmc)
  Vec6 tau = Vec6::Zero();
  double obs_error_norm = 0.0;
  double param_error_norm = 0.0;
};

struct TraceRow
{
  double t = 0.0;
  std::vector<VesselRecord> vessels;
};

/// Full record of one run: the configuration it came from, the verdict, and
/// the sampled time series.
struct SimTrace
{
  ScenarioConfig config;
  Verdict verdict = Verdict::completed;
  std::string halt_reason; // empty unless diverged
  std::vector<TraceRow> rows;
};

/// Writes the trace as CSV (17 significant digits, exact double round-trip)
/// plus a "<path>.meta" sidecar carrying verdict, seed, and the config echo.
void write_trace(const SimTrace& trace, const std::string& path);

/// Reads a CSV written by write_trace; the sidecar is consulted when
/// present to restore verdict and config.
SimTrace read_trace(const std::string& path);

std::string to_string(Verdict v);

} // namespace fleetform

#endif // FLEETFORM_TRACE_HPP
