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

#ifndef FLEETFORM_TOPOLOGY_HPP
#define FLEETFORM_TOPOLOGY_HPP

#include <vector>

#include "fleetform/types.hpp"

namespace fleetform
{

/// One undirected communication link between vessels i and j.
struct Edge
{
  int i = 0;
  int j = 0;
  double weight = 0.0;
};

/// Inter-vessel communication graph: symmetric nonnegative adjacency plus
/// per-vessel reference-access weights b_i. Immutable after construction.
struct Topology
{
  int n_vessels = 0;
  MatX adjacency;        // n x n, symmetric, zero diagonal
  VecX reference_access; // length n, entries >= 0

  std::vector<int> neighbors_of(int i) const;
};

/// Builds a Topology from an undirected edge list (one entry per pair).
/// Rejects out-of-range indices, self-edges, duplicate pairs, and
/// non-positive weights.
Topology build_topology(const std::vector<Edge>& edges, const VecX& reference_access, int n);

/// Graph Laplacian L = D - A with D = diag(row sums of A).
MatX laplacian(const Topology& t);

struct ConsensusGain
{
  MatX matrix; // L + diag(b)
  bool positive_definite = false;
  double min_eigenvalue = 0.0;
};

/// L + diag(b) together with a positive-definiteness report (smallest
/// eigenvalue compared against `tolerance`).
ConsensusGain consensus_gain_matrix(const Topology& t, double tolerance = 1e-10);

/// True iff every vertex is reachable from vertex 0 over positive-weight
/// edges. Reference access b_i plays no part here.
bool is_connected(const Topology& t);

} // namespace fleetform

#endif // FLEETFORM_TOPOLOGY_HPP
