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

#include "fleetform/shunting.hpp"

#include <cmath>

namespace fleetform
{

Vec6 shunting_activation(const Vec6& z, const ShuntingParams& p)
{
  Vec6 g;
  for (int k = 0; k < 6; ++k)
  {
    g(k) = (z(k) >= 0.0 ? p.b : p.d) * z(k);
  }
  return g;
}

Vec6 shunting_rate(const NeuroState& state, const Vec6& z, const ShuntingParams& p)
{
  const Vec6 g = shunting_activation(z, p);
  Vec6 rate;
  for (int k = 0; k < 6; ++k)
  {
    rate(k) = -(p.a + std::abs(z(k))) * state.vartheta(k) + g(k);
  }
  return rate;
}

} // namespace fleetform
