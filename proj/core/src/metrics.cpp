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

#include "fleetform/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fleetform
{

Metrics compute_metrics(const SimTrace& trace, double settle_threshold)
{
  if (trace.rows.empty())
  {
    throw std::invalid_argument("metrics: trace has no rows");
  }
  const size_t n_rows = trace.rows.size();
  const size_t n_vessels = trace.rows.front().vessels.size();

  Metrics m;
  m.verdict = trace.verdict;
  m.settle_threshold = settle_threshold;
  m.vessels.resize(n_vessels);

  for (size_t i = 0; i < n_vessels; ++i)
  {
    VesselMetrics& vm = m.vessels[i];

    // Scan from the end: the settle time is the first instant after which
    // the error norm never leaves the threshold again.
    std::optional<size_t> settle_row;
    for (size_t k = n_rows; k-- > 0;)
    {
      if (trace.rows[k].vessels[i].error.norm() >= settle_threshold)
      {
        break;
      }
      settle_row = k;
    }
    if (settle_row && trace.verdict == Verdict::completed)
    {
      vm.settle_time = trace.rows[*settle_row].t;
    }

    double peak = 0.0;
    double max_activity = 0.0;
    for (const TraceRow& row : trace.rows)
    {
      peak = std::max(peak, row.vessels[i].error.norm());
      max_activity = std::max(max_activity, row.vessels[i].vartheta.cwiseAbs().maxCoeff());
    }
    vm.error_peak = peak;
    vm.max_abs_activity = max_activity;

    const size_t tail_start = n_rows - std::max<size_t>(1, n_rows / 4);
    double sum_sq = 0.0;
    size_t count = 0;
    for (size_t k = tail_start; k < n_rows; ++k)
    {
      sum_sq += trace.rows[k].vessels[i].error.squaredNorm();
      ++count;
    }
    vm.error_rms_tail = std::sqrt(sum_sq / static_cast<double>(count));

    double tv = 0.0;
    for (size_t k = 0; k + 1 < n_rows; ++k)
    {
      tv += (trace.rows[k + 1].vessels[i].tau - trace.rows[k].vessels[i].tau)
                .cwiseAbs()
                .sum();
    }
    vm.control_total_variation = tv;

    vm.final_obs_error = trace.rows.back().vessels[i].obs_error_norm;
    vm.final_param_error = trace.rows.back().vessels[i].param_error_norm;
  }
  return m;
}

std::string format_metrics(const Metrics& m)
{
  std::ostringstream out;
  out << "verdict: " << to_string(m.verdict) << "\n";
  out << "settle threshold: " << m.settle_threshold << "\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-8s %-10s %-12s %-12s %-14s %-12s %-12s %-12s\n", "vessel",
                "settle[s]", "rms(tail)", "peak", "TV(tau)", "max|act|", "obs_err", "param_err");
  out << buf;
  for (size_t i = 0; i < m.vessels.size(); ++i)
  {
    const VesselMetrics& vm = m.vessels[i];
    std::string settle = vm.settle_time ? [&] {
      char s[32];
      std::snprintf(s, sizeof(s), "%.3f", *vm.settle_time);
      return std::string(s);
    }() : std::string("unsettled");
    std::snprintf(buf, sizeof(buf), "%-8zu %-10s %-12.4g %-12.4g %-14.6g %-12.4g %-12.4g %-12.4g\n",
                  i + 1, settle.c_str(), vm.error_rms_tail, vm.error_peak,
                  vm.control_total_variation, vm.max_abs_activity, vm.final_obs_error,
                  vm.final_param_error);
    out << buf;
  }
  return out.str();
}

} // namespace fleetform
