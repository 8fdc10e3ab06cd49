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

#include "fleetform/topology.hpp"

#include <Eigen/Eigenvalues>
#include <queue>
#include <string>

namespace fleetform
{

std::vector<int> Topology::neighbors_of(int i) const
{
  std::vector<int> out;
  for (int j = 0; j < n_vessels; ++j)
  {
    if (adjacency(i, j) > 0.0)
    {
      out.push_back(j);
    }
  }
  return out;
}

Topology build_topology(const std::vector<Edge>& edges, const VecX& reference_access, int n)
{
  if (n < 1)
  {
    throw std::invalid_argument("topology: vessel count must be positive, got " + std::to_string(n));
  }
  if (reference_access.size() != n)
  {
    throw std::invalid_argument("topology: reference_access has " +
                                std::to_string(reference_access.size()) + " entries, expected " +
                                std::to_string(n));
  }
  for (int i = 0; i < n; ++i)
  {
    if (!(reference_access(i) >= 0.0))
    {
      throw std::invalid_argument("topology: reference_access[" + std::to_string(i) +
                                  "] must be nonnegative");
    }
  }

  Topology t;
  t.n_vessels = n;
  t.adjacency = MatX::Zero(n, n);
  t.reference_access = reference_access;

  for (const Edge& e : edges)
  {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
    {
      throw std::invalid_argument("topology: edge (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ") out of range for n=" + std::to_string(n));
    }
    if (e.i == e.j)
    {
      throw std::invalid_argument("topology: self-edge at vertex " + std::to_string(e.i));
    }
    if (!(e.weight > 0.0))
    {
      throw std::invalid_argument("topology: edge (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ") has non-positive weight");
    }
    if (t.adjacency(e.i, e.j) != 0.0)
    {
      throw std::invalid_argument("topology: duplicate edge (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ")");
    }
    t.adjacency(e.i, e.j) = e.weight;
    t.adjacency(e.j, e.i) = e.weight;
  }
  return t;
}

MatX laplacian(const Topology& t)
{
  const int n = t.n_vessels;
  MatX lap = -t.adjacency;
  for (int i = 0; i < n; ++i)
  {
    double degree = 0.0;
    for (int j = 0; j < n; ++j)
    {
      degree += t.adjacency(i, j);
    }
    lap(i, i) = degree;
  }
  return lap;
}

ConsensusGain consensus_gain_matrix(const Topology& t, double tolerance)
{
  ConsensusGain g;
  g.matrix = laplacian(t);
  g.matrix.diagonal() += t.reference_access;

  Eigen::SelfAdjointEigenSolver<MatX> solver(g.matrix, Eigen::EigenvaluesOnly);
  g.min_eigenvalue = solver.eigenvalues().minCoeff();
  g.positive_definite = g.min_eigenvalue > tolerance;
  return g;
}

bool is_connected(const Topology& t)
{
  const int n = t.n_vessels;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty())
  {
    const int i = frontier.front();
    frontier.pop();
    for (int j = 0; j < n; ++j)
    {
      if (!seen[j] && t.adjacency(i, j) > 0.0)
      {
        seen[j] = 1;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == n;
}

} // namespace fleetform
