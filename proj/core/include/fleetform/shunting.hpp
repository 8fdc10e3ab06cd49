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

#ifndef FLEETFORM_SHUNTING_HPP
#define FLEETFORM_SHUNTING_HPP

#include "fleetform/types.hpp"

namespace fleetform
{

/// Shunting-model constants: passive decay a, upper activity bound b,
/// lower activity bound magnitude d. All positive.
struct ShuntingParams
{
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
};

/// Neural activities of one vessel. Trajectories started inside [-d, b]
/// stay there for any bounded input signal.
struct NeuroState
{
  Vec6 vartheta = Vec6::Zero();
};

/// Piecewise-linear input gain: b*z for z >= 0, d*z for z < 0.
Vec6 shunting_activation(const Vec6& z, const ShuntingParams& p);

/// Componentwise vartheta_dot_j = -(a + |z_j|) vartheta_j + g(z_j).
Vec6 shunting_rate(const NeuroState& state, const Vec6& z, const ShuntingParams& p);

} // namespace fleetform

#endif // FLEETFORM_SHUNTING_HPP
