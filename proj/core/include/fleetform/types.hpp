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

#ifndef FLEETFORM_TYPES_HPP
#define FLEETFORM_TYPES_HPP

#include <Eigen/Core>
#include <stdexcept>

namespace fleetform
{

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec24 = Eigen::Matrix<double, 24, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;

/// 6x24 regressor: one 4-wide block per degree of freedom.
using RegressionMatrix = Eigen::Matrix<double, 6, 24>;

/// Thrown when a kinematic transform is evaluated at (or too close to)
/// the pitch singularity.
class singularity_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace fleetform

#endif // FLEETFORM_TYPES_HPP
