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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace fleetform;

namespace
{

Topology chain4()
{
  return build_topology({{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}}, VecX::Ones(4), 4);
}

} // namespace

TEST_CASE("construction rejects malformed graphs")
{
  const VecX b = VecX::Ones(3);
  CHECK_THROWS_AS(build_topology({{0, 3, 1.0}}, b, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_topology({{-1, 0, 1.0}}, b, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_topology({{1, 1, 1.0}}, b, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_topology({{0, 1, -2.0}}, b, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_topology({{0, 1, 0.0}}, b, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_topology({{0, 1, 1.0}, {1, 0, 1.0}}, b, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_topology({}, VecX::Ones(2), 3), std::invalid_argument);
  CHECK_THROWS_AS(build_topology({}, -VecX::Ones(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(build_topology({}, b, 0), std::invalid_argument);
}

TEST_CASE("four vessel chain")
{
  const Topology t = chain4();
  CHECK(t.adjacency(0, 1) == 1.0);
  CHECK(t.adjacency(1, 0) == 1.0);
  CHECK(t.adjacency(0, 3) == 0.0);
  CHECK(t.neighbors_of(0) == std::vector<int>{1});
  CHECK(t.neighbors_of(1) == std::vector<int>{0, 2});

  MatX expected(4, 4);
  expected << 1, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 1;
  CHECK((laplacian(t) - expected).cwiseAbs().maxCoeff() == 0.0);

  const ConsensusGain g = consensus_gain_matrix(t);
  CHECK(g.matrix(0, 0) == 2.0);
  CHECK(g.matrix(1, 1) == 3.0);
  CHECK(g.matrix(2, 2) == 3.0);
  CHECK(g.matrix(3, 3) == 2.0);
  CHECK(g.matrix(0, 1) == -1.0);
  CHECK(g.positive_definite);
  CHECK(g.min_eigenvalue > 0.1);

  CHECK(is_connected(t));
}

TEST_CASE("degenerate fleets")
{
  const Topology lone = build_topology({}, VecX::Ones(1), 1);
  CHECK(is_connected(lone));
  CHECK(laplacian(lone)(0, 0) == 0.0);
  const ConsensusGain g = consensus_gain_matrix(lone);
  CHECK(g.matrix(0, 0) == 1.0);
  CHECK(g.positive_definite);

  const Topology pair_no_edges = build_topology({}, VecX::Zero(2), 2);
  CHECK_FALSE(is_connected(pair_no_edges));
  CHECK(laplacian(pair_no_edges).cwiseAbs().maxCoeff() == 0.0);

  // valid topology, but without reference access L+B stays singular
  const Topology no_access = build_topology({{0, 1, 2.0}}, VecX::Zero(2), 2);
  MatX expected(2, 2);
  expected << 2, -2, -2, 2;
  CHECK((laplacian(no_access) - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK_FALSE(consensus_gain_matrix(no_access).positive_definite);
}

TEST_CASE("connected graph with reference access keeps L+B positive definite")
{
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial)
  {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const Topology t = testing::random_connected_topology(rng, n);
    CAPTURE(trial);
    CHECK(is_connected(t));
    CHECK(consensus_gain_matrix(t).positive_definite);
  }
}

TEST_CASE("laplacian row sums vanish and symmetry carries over")
{
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial)
  {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const Topology t = testing::random_connected_topology(rng, n, false);
    const MatX lap = laplacian(t);
    CHECK((lap * VecX::Ones(n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((lap - lap.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}
