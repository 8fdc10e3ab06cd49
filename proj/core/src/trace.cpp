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

#include "fleetform/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fleetform
{

namespace
{

void append(std::string& line, double x)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), ",%.17g", x);
  line += buf;
}

void append(std::string& line, const Vec6& v)
{
  for (int k = 0; k < 6; ++k)
  {
    append(line, v(k));
  }
}

std::string header_for(int n_vessels)
{
  std::string h = "t";
  const char* groups[] = {"eta", "v", "e", "z", "theta_act", "tau"};
  for (int i = 1; i <= n_vessels; ++i)
  {
    for (const char* g : groups)
    {
      for (int k = 1; k <= 6; ++k)
      {
        h += "," + std::string(g) + "_" + std::to_string(i) + "_" + std::to_string(k);
      }
    }
    h += ",obs_err_" + std::to_string(i);
    h += ",param_err_" + std::to_string(i);
  }
  return h;
}

} // namespace

std::string to_string(Verdict v)
{
  return v == Verdict::completed ? "completed" : "diverged";
}

void write_trace(const SimTrace& trace, const std::string& path)
{
  std::ofstream csv(path);
  if (!csv)
  {
    throw std::runtime_error("cannot open trace file '" + path + "' for writing");
  }
  const int n = trace.config.n_vessels;
  csv << header_for(n) << "\n";
  for (const TraceRow& row : trace.rows)
  {
    std::string line;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", row.t);
    line += buf;
    for (const VesselRecord& r : row.vessels)
    {
      append(line, r.eta);
      append(line, r.nu);
      append(line, r.error);
      append(line, r.z);
      append(line, r.vartheta);
      append(line, r.tau);
      append(line, r.obs_error_norm);
      append(line, r.param_error_norm);
    }
    csv << line << "\n";
  }
  if (!csv)
  {
    throw std::runtime_error("write failed for trace file '" + path + "'");
  }

  std::ofstream meta(path + ".meta");
  if (!meta)
  {
    throw std::runtime_error("cannot open sidecar file '" + path + ".meta' for writing");
  }
  meta << "verdict = " << to_string(trace.verdict) << "\n";
  if (!trace.halt_reason.empty())
  {
    meta << "# halt: " << trace.halt_reason << "\n";
  }
  meta << serialize_config(trace.config);
  if (!meta)
  {
    throw std::runtime_error("write failed for sidecar file '" + path + ".meta'");
  }
}

SimTrace read_trace(const std::string& path)
{
  std::ifstream csv(path);
  if (!csv)
  {
    throw std::runtime_error("cannot open trace file '" + path + "'");
  }

  SimTrace trace;
  std::string line;
  if (!std::getline(csv, line))
  {
    throw std::runtime_error("trace file '" + path + "' is empty");
  }
  // Vessel count from the header: 38 columns per vessel after the time column.
  const long commas = std::count(line.begin(), line.end(), ',');
  if (commas % 38 != 0 || commas == 0)
  {
    throw std::runtime_error("trace file '" + path + "' has a malformed header");
  }
  const int n = static_cast<int>(commas / 38);

  while (std::getline(csv, line))
  {
    if (line.empty())
    {
      continue;
    }
    std::istringstream in(line);
    TraceRow row;
    char sep = 0;
    if (!(in >> row.t))
    {
      throw std::runtime_error("trace file '" + path + "': bad row '" + line + "'");
    }
    row.vessels.resize(n);
    const auto read6 = [&](Vec6& v) {
      for (int k = 0; k < 6; ++k)
      {
        if (!(in >> sep >> v(k)))
        {
          throw std::runtime_error("trace file '" + path + "': short row");
        }
      }
    };
    for (VesselRecord& r : row.vessels)
    {
      read6(r.eta);
      read6(r.nu);
      read6(r.error);
      read6(r.z);
      read6(r.vartheta);
      read6(r.tau);
      if (!(in >> sep >> r.obs_error_norm >> sep >> r.param_error_norm))
      {
        throw std::runtime_error("trace file '" + path + "': short row");
      }
    }
    trace.rows.push_back(std::move(row));
  }

  std::ifstream meta(path + ".meta");
  if (meta)
  {
    std::string meta_line;
    std::string config_text;
    while (std::getline(meta, meta_line))
    {
      if (meta_line.rfind("verdict = ", 0) == 0)
      {
        trace.verdict = meta_line.substr(10) == "diverged" ? Verdict::diverged
                                                           : Verdict::completed;
      }
      else
      {
        config_text += meta_line + "\n";
      }
    }
    trace.config = parse_config(config_text);
  }
  else
  {
    trace.config.n_vessels = n;
  }
  return trace;
}

} // namespace fleetform
