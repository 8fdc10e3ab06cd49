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

#include "fleetform/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fleetform
{

namespace
{

std::string trim(const std::string& s)
{
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos)
  {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& message)
{
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + message);
}

[[noreturn]] void fail(const std::string& message)
{
  throw std::invalid_argument("config: " + message);
}

std::vector<double> parse_numbers(int line, const std::string& key, const std::string& value,
                                  size_t expected)
{
  std::istringstream in(value);
  std::vector<double> out;
  double x = 0.0;
  while (in >> x)
  {
    out.push_back(x);
  }
  std::string leftover;
  if (!in.eof() && (in.clear(), in >> leftover))
  {
    fail(line, key + ": cannot parse '" + leftover + "' as a number");
  }
  if (expected != 0 && out.size() != expected)
  {
    fail(line, key + ": expected " + std::to_string(expected) + " numbers, got " +
                   std::to_string(out.size()));
  }
  return out;
}

Vec6 to_vec6(const std::vector<double>& v, size_t offset = 0)
{
  Vec6 out;
  for (int k = 0; k < 6; ++k)
  {
    out(k) = v[offset + k];
  }
  return out;
}

Vec3 to_vec3(const std::vector<double>& v, size_t offset = 0)
{
  return Vec3(v[offset], v[offset + 1], v[offset + 2]);
}

std::string fmt(double x)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt(const Vec3& v)
{
  return fmt(v(0)) + " " + fmt(v(1)) + " " + fmt(v(2));
}

std::string fmt(const Vec6& v)
{
  std::string s = fmt(v(0));
  for (int k = 1; k < 6; ++k)
  {
    s += " " + fmt(v(k));
  }
  return s;
}

void require_positive6(const Vec6& v, const std::string& key)
{
  for (int k = 0; k < 6; ++k)
  {
    if (!(v(k) > 0.0))
    {
      fail(key + " must be strictly positive in every entry");
    }
  }
}

void require_nonnegative6(const Vec6& v, const std::string& key)
{
  for (int k = 0; k < 6; ++k)
  {
    if (!(v(k) >= 0.0))
    {
      fail(key + " must be nonnegative in every entry");
    }
  }
}

void hard_validate(const ScenarioConfig& cfg)
{
  if (cfg.n_vessels < 1)
  {
    fail("n_vessels must be at least 1");
  }
  // Topology construction re-checks edge indices, weights, and duplicates.
  const Topology topo = build_topology(cfg.edges, cfg.reference_access, cfg.n_vessels);

  std::set<std::pair<int, int>> offset_pairs;
  for (const auto& [pair, delta] : cfg.offsets)
  {
    const auto [i, j] = pair;
    if (i < 0 || i >= cfg.n_vessels || j < 0 || j >= cfg.n_vessels || i == j)
    {
      fail("offset pair (" + std::to_string(i) + "," + std::to_string(j) + ") is invalid");
    }
    if (!offset_pairs.insert({i, j}).second)
    {
      fail("duplicate offset for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (const auto& [pair, delta] : cfg.offsets)
  {
    const auto [i, j] = pair;
    bool found = false;
    for (const auto& [other, other_delta] : cfg.offsets)
    {
      if (other.first == j && other.second == i)
      {
        found = true;
        if ((delta + other_delta).norm() > 1e-12)
        {
          fail("offsets for (" + std::to_string(i) + "," + std::to_string(j) +
               ") and its reverse are not negatives of each other");
        }
      }
    }
    if (!found)
    {
      fail("offset for (" + std::to_string(i) + "," + std::to_string(j) +
           ") has no reverse entry");
    }
  }

  theta_from_physical(cfg.vessel_params); // throws on a non-physical craft

  require_positive6(cfg.est_gains.observer, "observer_gain");
  require_positive6(cfg.est_gains.adaptation, "adaptation_gain");
  require_positive6(cfg.gains.k1, "k1");
  require_positive6(cfg.gains.k2, "k2");
  if (!(cfg.gains.shunting.a > 0.0 && cfg.gains.shunting.b > 0.0 && cfg.gains.shunting.d > 0.0))
  {
    fail("shunting constants a, b, d must be positive");
  }
  if (!(cfg.gains.sat_layer > 0.0))
  {
    fail("sat_layer must be positive");
  }
  if (!(cfg.gains.b_floor > 0.0))
  {
    fail("b_floor must be positive");
  }

  if (static_cast<int>(cfg.eta0.size()) != cfg.n_vessels)
  {
    fail("eta0 must be given once for every vessel (have " + std::to_string(cfg.eta0.size()) +
         " of " + std::to_string(cfg.n_vessels) + ")");
  }
  if (static_cast<int>(cfg.nu0.size()) != cfg.n_vessels)
  {
    fail("nu0 entries do not cover every vessel");
  }
  for (int i = 0; i < cfg.n_vessels; ++i)
  {
    if (std::abs(cfg.eta0[i](4)) >= 3.14159265358979323846 / 2.0 - kPitchSingularityGuard)
    {
      fail("eta0 of vessel " + std::to_string(i) + " starts at a singular pitch");
    }
  }

  require_nonnegative6(cfg.disturbance.amplitudes, "disturbance_amplitudes");
  require_nonnegative6(cfg.noise.sigma_eta, "noise_sigma_eta");
  require_nonnegative6(cfg.noise.sigma_v, "noise_sigma_v");

  if (!(cfg.dt > 0.0))
  {
    fail("dt must be positive");
  }
  if (!(cfg.horizon >= 0.0))
  {
    fail("horizon must be nonnegative");
  }
  if (cfg.record_every < 1)
  {
    fail("record_every must be at least 1");
  }

  if (cfg.trajectory != TrajectoryKind::constant)
  {
    for (int i = 0; i < cfg.n_vessels; ++i)
    {
      if (topo.reference_access(i) == 0.0)
      {
        fail("vessel " + std::to_string(i) +
             " has no reference access (b=0) but the trajectory has nonzero rates; "
             "how such a vessel would obtain the reference rate is undefined");
      }
    }
  }
}

} // namespace

std::string to_string(ControllerKind kind)
{
  switch (kind)
  {
    case ControllerKind::blc: return "blc";
    case ControllerKind::lc: return "lc";
    case ControllerKind::lsmc: return "lsmc";
  }
  return "blc";
}

ControllerKind controller_from_string(const std::string& s)
{
  if (s == "blc")
  {
    return ControllerKind::blc;
  }
  if (s == "lc")
  {
    return ControllerKind::lc;
  }
  if (s == "lsmc")
  {
    return ControllerKind::lsmc;
  }
  throw std::invalid_argument("unknown controller '" + s + "' (expected blc, lc, or lsmc)");
}

bool ScenarioConfig::operator==(const ScenarioConfig& other) const
{
  const auto eq6 = [](const Vec6& a, const Vec6& b) { return (a.array() == b.array()).all(); };
  const auto eq3 = [](const Vec3& a, const Vec3& b) { return (a.array() == b.array()).all(); };

  if (name != other.name || controller != other.controller || n_vessels != other.n_vessels ||
      edges.size() != other.edges.size() || offsets.size() != other.offsets.size() ||
      eta0.size() != other.eta0.size() || nu0.size() != other.nu0.size())
  {
    return false;
  }
  for (size_t k = 0; k < edges.size(); ++k)
  {
    if (edges[k].i != other.edges[k].i || edges[k].j != other.edges[k].j ||
        edges[k].weight != other.edges[k].weight)
    {
      return false;
    }
  }
  if (reference_access.size() != other.reference_access.size() ||
      !(reference_access.array() == other.reference_access.array()).all())
  {
    return false;
  }
  for (size_t k = 0; k < offsets.size(); ++k)
  {
    if (offsets[k].first != other.offsets[k].first || !eq3(offsets[k].second, other.offsets[k].second))
    {
      return false;
    }
  }
  const PhysicalParams &p = vessel_params, &q = other.vessel_params;
  if (p.mass != q.mass || !eq3(p.inertia, q.inertia) ||
      !eq3(p.damping_linear, q.damping_linear) || !eq3(p.damping_angular, q.damping_angular) ||
      !eq3(p.added_mass_linear, q.added_mass_linear) ||
      !eq3(p.added_mass_angular, q.added_mass_angular))
  {
    return false;
  }
  if (!eq6(est_gains.observer, other.est_gains.observer) ||
      !eq6(est_gains.adaptation, other.est_gains.adaptation) || !eq6(gains.k1, other.gains.k1) ||
      !eq6(gains.k2, other.gains.k2) || gains.shunting.a != other.gains.shunting.a ||
      gains.shunting.b != other.gains.shunting.b || gains.shunting.d != other.gains.shunting.d ||
      gains.sat_layer != other.gains.sat_layer || gains.b_floor != other.gains.b_floor)
  {
    return false;
  }
  if (trajectory != other.trajectory || !eq3(trajectory_coeffs, other.trajectory_coeffs))
  {
    return false;
  }
  for (size_t k = 0; k < eta0.size(); ++k)
  {
    if (!eq6(eta0[k], other.eta0[k]) || !eq6(nu0[k], other.nu0[k]))
    {
      return false;
    }
  }
  if (disturbance.kind != other.disturbance.kind ||
      !eq6(disturbance.amplitudes, other.disturbance.amplitudes) ||
      disturbance.omega != other.disturbance.omega)
  {
    return false;
  }
  if (noise.kind != other.noise.kind || !eq6(noise.sigma_eta, other.noise.sigma_eta) ||
      !eq6(noise.sigma_v, other.noise.sigma_v) || noise.seed != other.noise.seed)
  {
    return false;
  }
  return dt == other.dt && horizon == other.horizon && record_every == other.record_every;
}

ScenarioConfig parse_config(const std::string& text)
{
  ScenarioConfig cfg;
  cfg.gains.shunting = ShuntingParams{10.0, 50.0, 50.0};

  std::map<std::string, int> seen; // single-valued keys already consumed
  std::map<int, Vec6> eta0_by_vessel;
  std::map<int, Vec6> nu0_by_vessel;
  bool any_line = false;

  const auto single = [&seen](int line, const std::string& key) {
    if (seen.count(key))
    {
      fail(line, "key '" + key + "' already set on line " + std::to_string(seen[key]));
    }
    seen[key] = line;
  };

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw))
  {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos)
    {
      raw = raw.substr(0, hash);
    }
    const std::string stripped = trim(raw);
    if (stripped.empty())
    {
      continue;
    }
    const auto eq_pos = stripped.find('=');
    if (eq_pos == std::string::npos)
    {
      fail(line, "expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq_pos));
    const std::string value = trim(stripped.substr(eq_pos + 1));
    if (key.empty())
    {
      fail(line, "empty key");
    }
    any_line = true;

    if (key == "name")
    {
      single(line, key);
      cfg.name = value;
    }
    else if (key == "controller")
    {
      single(line, key);
      try
      {
        cfg.controller = controller_from_string(value);
      }
      catch (const std::invalid_argument& e)
      {
        fail(line, e.what());
      }
    }
    else if (key == "n_vessels")
    {
      single(line, key);
      cfg.n_vessels = static_cast<int>(parse_numbers(line, key, value, 1)[0]);
    }
    else if (key == "edge")
    {
      const auto v = parse_numbers(line, key, value, 3);
      cfg.edges.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), v[2]});
    }
    else if (key == "reference_access")
    {
      single(line, key);
      const auto v = parse_numbers(line, key, value, 0);
      cfg.reference_access = Eigen::Map<const VecX>(v.data(), static_cast<long>(v.size()));
    }
    else if (key == "offset")
    {
      const auto v = parse_numbers(line, key, value, 5);
      cfg.offsets.push_back(
          {{static_cast<int>(v[0]), static_cast<int>(v[1])}, to_vec3(v, 2)});
    }
    else if (key == "mass")
    {
      single(line, key);
      cfg.vessel_params.mass = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "inertia")
    {
      single(line, key);
      cfg.vessel_params.inertia = to_vec3(parse_numbers(line, key, value, 3));
    }
    else if (key == "damping_linear")
    {
      single(line, key);
      cfg.vessel_params.damping_linear = to_vec3(parse_numbers(line, key, value, 3));
    }
    else if (key == "damping_angular")
    {
      single(line, key);
      cfg.vessel_params.damping_angular = to_vec3(parse_numbers(line, key, value, 3));
    }
    else if (key == "added_mass_linear")
    {
      single(line, key);
      cfg.vessel_params.added_mass_linear = to_vec3(parse_numbers(line, key, value, 3));
    }
    else if (key == "added_mass_angular")
    {
      single(line, key);
      cfg.vessel_params.added_mass_angular = to_vec3(parse_numbers(line, key, value, 3));
    }
    else if (key == "observer_gain")
    {
      single(line, key);
      cfg.est_gains.observer = to_vec6(parse_numbers(line, key, value, 6));
    }
    else if (key == "adaptation_gain")
    {
      single(line, key);
      cfg.est_gains.adaptation = to_vec6(parse_numbers(line, key, value, 6));
    }
    else if (key == "k1")
    {
      single(line, key);
      cfg.gains.k1 = to_vec6(parse_numbers(line, key, value, 6));
    }
    else if (key == "k2")
    {
      single(line, key);
      cfg.gains.k2 = to_vec6(parse_numbers(line, key, value, 6));
    }
    else if (key == "shunting_a")
    {
      single(line, key);
      cfg.gains.shunting.a = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "shunting_b")
    {
      single(line, key);
      cfg.gains.shunting.b = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "shunting_d")
    {
      single(line, key);
      cfg.gains.shunting.d = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "sat_layer")
    {
      single(line, key);
      cfg.gains.sat_layer = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "b_floor")
    {
      single(line, key);
      cfg.gains.b_floor = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "trajectory")
    {
      single(line, key);
      if (value == "constant")
      {
        cfg.trajectory = TrajectoryKind::constant;
      }
      else if (value == "exp_line")
      {
        cfg.trajectory = TrajectoryKind::exp_line;
      }
      else
      {
        fail(line, "unknown trajectory '" + value + "' (expected constant or exp_line)");
      }
    }
    else if (key == "trajectory_coeffs")
    {
      single(line, key);
      cfg.trajectory_coeffs = to_vec3(parse_numbers(line, key, value, 3));
    }
    else if (key == "eta0")
    {
      const auto v = parse_numbers(line, key, value, 7);
      const int i = static_cast<int>(v[0]);
      if (eta0_by_vessel.count(i))
      {
        fail(line, "duplicate eta0 for vessel " + std::to_string(i));
      }
      eta0_by_vessel[i] = to_vec6(v, 1);
    }
    else if (key == "nu0")
    {
      const auto v = parse_numbers(line, key, value, 7);
      const int i = static_cast<int>(v[0]);
      if (nu0_by_vessel.count(i))
      {
        fail(line, "duplicate nu0 for vessel " + std::to_string(i));
      }
      nu0_by_vessel[i] = to_vec6(v, 1);
    }
    else if (key == "disturbance")
    {
      single(line, key);
      if (value == "none")
      {
        cfg.disturbance.kind = DisturbanceKind::none;
      }
      else if (value == "sinusoidal")
      {
        cfg.disturbance.kind = DisturbanceKind::sinusoidal;
      }
      else
      {
        fail(line, "unknown disturbance '" + value + "' (expected none or sinusoidal)");
      }
    }
    else if (key == "disturbance_amplitudes")
    {
      single(line, key);
      cfg.disturbance.amplitudes = to_vec6(parse_numbers(line, key, value, 6));
    }
    else if (key == "disturbance_omega")
    {
      single(line, key);
      cfg.disturbance.omega = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "noise")
    {
      single(line, key);
      if (value == "none")
      {
        cfg.noise.kind = NoiseKind::none;
      }
      else if (value == "gaussian")
      {
        cfg.noise.kind = NoiseKind::gaussian;
      }
      else
      {
        fail(line, "unknown noise '" + value + "' (expected none or gaussian)");
      }
    }
    else if (key == "noise_sigma_eta")
    {
      single(line, key);
      cfg.noise.sigma_eta = to_vec6(parse_numbers(line, key, value, 6));
    }
    else if (key == "noise_sigma_v")
    {
      single(line, key);
      cfg.noise.sigma_v = to_vec6(parse_numbers(line, key, value, 6));
    }
    else if (key == "seed")
    {
      single(line, key);
      try
      {
        cfg.noise.seed = std::stoull(value);
      }
      catch (const std::exception&)
      {
        fail(line, "seed: cannot parse '" + value + "' as an unsigned integer");
      }
    }
    else if (key == "dt")
    {
      single(line, key);
      cfg.dt = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "horizon")
    {
      single(line, key);
      cfg.horizon = parse_numbers(line, key, value, 1)[0];
    }
    else if (key == "record_every")
    {
      single(line, key);
      cfg.record_every = static_cast<int>(parse_numbers(line, key, value, 1)[0]);
    }
    else
    {
      fail(line, "unknown key '" + key + "'");
    }
  }

  if (!any_line)
  {
    fail("empty configuration");
  }
  for (const char* required : {"name", "controller", "n_vessels", "reference_access", "mass",
                               "inertia", "damping_linear", "damping_angular",
                               "added_mass_linear", "added_mass_angular", "observer_gain",
                               "adaptation_gain", "k1", "k2", "trajectory", "trajectory_coeffs"})
  {
    if (!seen.count(required))
    {
      fail(std::string("missing required key '") + required + "'");
    }
  }

  for (int i = 0; i < cfg.n_vessels; ++i)
  {
    const auto it = eta0_by_vessel.find(i);
    if (it == eta0_by_vessel.end())
    {
      fail("missing eta0 for vessel " + std::to_string(i));
    }
    cfg.eta0.push_back(it->second);
    const auto nu_it = nu0_by_vessel.find(i);
    cfg.nu0.push_back(nu_it == nu0_by_vessel.end() ? Vec6::Zero() : nu_it->second);
  }
  for (const auto& [i, v] : eta0_by_vessel)
  {
    if (i < 0 || i >= cfg.n_vessels)
    {
      fail("eta0 given for vessel " + std::to_string(i) + " which does not exist");
    }
  }
  for (const auto& [i, v] : nu0_by_vessel)
  {
    if (i < 0 || i >= cfg.n_vessels)
    {
      fail("nu0 given for vessel " + std::to_string(i) + " which does not exist");
    }
  }

  hard_validate(cfg);
  return cfg;
}

ScenarioConfig load_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw std::invalid_argument("cannot open config file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize_config(const ScenarioConfig& cfg)
{
  std::ostringstream out;
  out << "name = " << cfg.name << "\n";
  out << "controller = " << to_string(cfg.controller) << "\n";
  out << "n_vessels = " << cfg.n_vessels << "\n";
  out << "dt = " << fmt(cfg.dt) << "\n";
  out << "horizon = " << fmt(cfg.horizon) << "\n";
  out << "record_every = " << cfg.record_every << "\n";
  out << "seed = " << cfg.noise.seed << "\n";

  for (const Edge& e : cfg.edges)
  {
    out << "edge = " << e.i << " " << e.j << " " << fmt(e.weight) << "\n";
  }
  out << "reference_access =";
  for (long k = 0; k < cfg.reference_access.size(); ++k)
  {
    out << " " << fmt(cfg.reference_access(k));
  }
  out << "\n";
  for (const auto& [pair, delta] : cfg.offsets)
  {
    out << "offset = " << pair.first << " " << pair.second << " " << fmt(delta) << "\n";
  }

  out << "mass = " << fmt(cfg.vessel_params.mass) << "\n";
  out << "inertia = " << fmt(cfg.vessel_params.inertia) << "\n";
  out << "damping_linear = " << fmt(cfg.vessel_params.damping_linear) << "\n";
  out << "damping_angular = " << fmt(cfg.vessel_params.damping_angular) << "\n";
  out << "added_mass_linear = " << fmt(cfg.vessel_params.added_mass_linear) << "\n";
  out << "added_mass_angular = " << fmt(cfg.vessel_params.added_mass_angular) << "\n";

  out << "observer_gain = " << fmt(cfg.est_gains.observer) << "\n";
  out << "adaptation_gain = " << fmt(cfg.est_gains.adaptation) << "\n";
  out << "k1 = " << fmt(cfg.gains.k1) << "\n";
  out << "k2 = " << fmt(cfg.gains.k2) << "\n";
  out << "shunting_a = " << fmt(cfg.gains.shunting.a) << "\n";
  out << "shunting_b = " << fmt(cfg.gains.shunting.b) << "\n";
  out << "shunting_d = " << fmt(cfg.gains.shunting.d) << "\n";
  out << "sat_layer = " << fmt(cfg.gains.sat_layer) << "\n";
  out << "b_floor = " << fmt(cfg.gains.b_floor) << "\n";

  out << "trajectory = " << (cfg.trajectory == TrajectoryKind::constant ? "constant" : "exp_line")
      << "\n";
  out << "trajectory_coeffs = " << fmt(cfg.trajectory_coeffs) << "\n";

  for (int i = 0; i < cfg.n_vessels; ++i)
  {
    out << "eta0 = " << i << " " << fmt(cfg.eta0[i]) << "\n";
  }
  for (int i = 0; i < cfg.n_vessels; ++i)
  {
    out << "nu0 = " << i << " " << fmt(cfg.nu0[i]) << "\n";
  }

  out << "disturbance = "
      << (cfg.disturbance.kind == DisturbanceKind::none ? "none" : "sinusoidal") << "\n";
  out << "disturbance_amplitudes = " << fmt(cfg.disturbance.amplitudes) << "\n";
  out << "disturbance_omega = " << fmt(cfg.disturbance.omega) << "\n";
  out << "noise = " << (cfg.noise.kind == NoiseKind::none ? "none" : "gaussian") << "\n";
  out << "noise_sigma_eta = " << fmt(cfg.noise.sigma_eta) << "\n";
  out << "noise_sigma_v = " << fmt(cfg.noise.sigma_v) << "\n";
  return out.str();
}

std::vector<std::string> validate_config(const ScenarioConfig& cfg)
{
  hard_validate(cfg);
  std::vector<std::string> warnings;

  const Topology topo = build_topology(cfg.edges, cfg.reference_access, cfg.n_vessels);
  if (!is_connected(topo))
  {
    warnings.push_back("communication graph is not connected");
  }
  if (topo.reference_access.maxCoeff() <= 0.0)
  {
    warnings.push_back("no vessel has reference access (all b are zero)");
  }
  else if (!consensus_gain_matrix(topo).positive_definite)
  {
    warnings.push_back("consensus gain matrix L+B is not positive definite");
  }
  for (const auto& [pair, delta] : cfg.offsets)
  {
    if (topo.adjacency(pair.first, pair.second) == 0.0)
    {
      warnings.push_back("offset given for non-neighbor pair (" + std::to_string(pair.first) +
                         "," + std::to_string(pair.second) + ")");
    }
  }
  if (cfg.noise.kind == NoiseKind::gaussian && cfg.noise.sigma_eta.maxCoeff() == 0.0 &&
      cfg.noise.sigma_v.maxCoeff() == 0.0)
  {
    warnings.push_back("gaussian noise enabled with all-zero sigmas");
  }
  return warnings;
}

ReferenceSample sample_reference(const ScenarioConfig& cfg, double t)
{
  ReferenceSample ref;
  if (cfg.trajectory == TrajectoryKind::constant)
  {
    ref.eta_d.head<3>() = cfg.trajectory_coeffs;
    return ref;
  }
  const double decay = std::exp(-t);
  const Vec3& c = cfg.trajectory_coeffs;
  ref.eta_d.head<3>() = Vec3(c(0) * (1.0 - decay), c(1) * t, c(2) * t);
  ref.eta_d_rate.head<3>() = Vec3(c(0) * decay, c(1), c(2));
  ref.eta_d_accel.head<3>() = Vec3(-c(0) * decay, 0.0, 0.0);
  return ref;
}

SimContext make_context(const ScenarioConfig& cfg)
{
  SimContext ctx;
  ctx.topology = build_topology(cfg.edges, cfg.reference_access, cfg.n_vessels);
  const ThetaVector theta = theta_from_physical(cfg.vessel_params);
  Vec6 inv_inertia;
  for (int k = 0; k < 6; ++k)
  {
    inv_inertia(k) = theta.input(k);
  }
  ctx.theta_true.assign(cfg.n_vessels, theta);
  ctx.inv_effective_inertia.assign(cfg.n_vessels, inv_inertia);
  ctx.controller = cfg.controller;
  ctx.est_gains = cfg.est_gains;
  ctx.gains = cfg.gains;
  ctx.disturbance = cfg.disturbance;
  ctx.noise = cfg.noise;
  for (const auto& [pair, delta] : cfg.offsets)
  {
    Vec6 full = Vec6::Zero();
    full.head<3>() = delta;
    ctx.offsets.set(pair.first, pair.second, full);
  }
  const ScenarioConfig snapshot = cfg;
  ctx.reference = [snapshot](double t) { return sample_reference(snapshot, t); };
  return ctx;
}

namespace
{

ScenarioConfig builtin_base()
{
  ScenarioConfig cfg;
  cfg.n_vessels = 4;
  cfg.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}};
  cfg.reference_access = VecX::Ones(4);
  cfg.offsets = {
      {{0, 1}, Vec3(0, 10, 0)},  {{1, 0}, Vec3(0, -10, 0)}, {{1, 2}, Vec3(-10, 0, 0)},
      {{2, 1}, Vec3(10, 0, 0)},  {{2, 3}, Vec3(0, -10, 0)}, {{3, 2}, Vec3(0, 10, 0)},
  };
  cfg.vessel_params = reference_vessel();
  cfg.est_gains.observer = Vec6::Constant(100.0);
  cfg.est_gains.adaptation = Vec6::Constant(0.1);
  cfg.trajectory = TrajectoryKind::exp_line;
  cfg.trajectory_coeffs = Vec3(30.0, 5.0, 2.0);
  cfg.eta0 = {
      (Vec6() << 3.0, 3.0, 3.0, 0.3, 0.0, 0.2).finished(),
      (Vec6() << 2.5, 3.5, 3.0, 0.2, 0.0, 0.25).finished(),
      (Vec6() << 2.0, 3.0, 3.0, 0.3, 0.0, 0.2).finished(),
      (Vec6() << 3.0, 3.0, 2.0, 0.3, 0.0, 0.2).finished(),
  };
  cfg.nu0.assign(4, Vec6::Zero());
  cfg.dt = 1e-3;
  cfg.horizon = 20.0;
  cfg.record_every = 10;
  cfg.noise.seed = 42;
  cfg.gains.shunting = ShuntingParams{10.0, 50.0, 50.0};
  cfg.gains.sat_layer = 1.0;
  return cfg;
}

void apply_controller(ScenarioConfig& cfg, ControllerKind kind)
{
  cfg.controller = kind;
  switch (kind)
  {
    case ControllerKind::blc:
      cfg.gains.k1 = (Vec6() << 15, 15, 15, 5, 5, 5).finished();
      cfg.gains.k2 = (Vec6() << 1, 1, 1, 0.5, 0.5, 0.5).finished();
      break;
    case ControllerKind::lc:
      cfg.gains.k1 = (Vec6() << 25, 25, 25, 5, 5, 5).finished();
      cfg.gains.k2 = (Vec6() << 10, 10, 10, 5, 5, 5).finished();
      break;
    case ControllerKind::lsmc:
      cfg.gains.k1 = (Vec6() << 15, 15, 15, 5, 5, 5).finished();
      cfg.gains.k2 = (Vec6() << 60, 60, 60, 15, 15, 15).finished();
      break;
  }
}

void apply_scenario(ScenarioConfig& cfg, int which)
{
  if (which == 2)
  {
    cfg.disturbance.kind = DisturbanceKind::sinusoidal;
    cfg.disturbance.amplitudes = (Vec6() << 110, 110, 110, 0.5, 0.5, 0.5).finished();
    cfg.disturbance.omega = 1.0;
  }
  else if (which == 3)
  {
    cfg.noise.kind = NoiseKind::gaussian;
    cfg.noise.sigma_eta = Vec6::Constant(0.01);
    cfg.noise.sigma_v = Vec6::Constant(0.01);
  }
}

} // namespace

std::vector<ScenarioConfig> builtin_scenarios()
{
  std::vector<ScenarioConfig> all;
  for (int which = 1; which <= 3; ++which)
  {
    for (const ControllerKind kind :
         {ControllerKind::blc, ControllerKind::lc, ControllerKind::lsmc})
    {
      ScenarioConfig cfg = builtin_base();
      apply_controller(cfg, kind);
      apply_scenario(cfg, which);
      cfg.name = "scenario" + std::to_string(which) + "_" + to_string(kind);
      all.push_back(std::move(cfg));
    }
  }
  return all;
}

ScenarioConfig builtin_scenario(const std::string& name, ControllerKind controller)
{
  const std::string full = name.find('_') == std::string::npos
                               ? name + "_" + to_string(controller)
                               : name;
  for (ScenarioConfig& cfg : builtin_scenarios())
  {
    if (cfg.name == full)
    {
      return cfg;
    }
  }
  throw std::invalid_argument("unknown scenario '" + name +
                              "' (try scenario1, scenario2, or scenario3)");
}

} // namespace fleetform
