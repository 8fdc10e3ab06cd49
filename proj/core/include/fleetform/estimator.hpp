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

#ifndef FLEETFORM_ESTIMATOR_HPP
#define FLEETFORM_ESTIMATOR_HPP

#include <utility>

#include "fleetform/vessel.hpp"

namespace fleetform
{

/// Per-vessel online identification state: a velocity observer v_hat plus
/// the current dynamic-parameter estimate.
struct EstimatorState
{
  Vec6 v_hat = Vec6::Zero();
  ThetaVector theta_hat;
};

/// Diagonal observer and adaptation gains; both must be strictly positive.
struct EstimatorGains
{
  Vec6 observer = Vec6::Zero();   // L
  Vec6 adaptation = Vec6::Zero(); // P
};

struct EstimatorRates
{
  Vec6 v_hat_dot = Vec6::Zero();
  Vec24 theta_dot = Vec24::Zero();
};

/// Gradient adaptation driven by the observation error v_hat - v:
///   v_hat_dot = psi * theta_hat - L (v_hat - v)
///   theta_dot = -psi^T P (v_hat - v)
EstimatorRates estimator_rates(const EstimatorState& s, const Vec6& v_measured,
                               const RegressionMatrix& psi, const EstimatorGains& g);

/// (||v_hat - v||, ||theta_hat - theta_true||). The true parameters are
/// simulator-side ground truth, never controller input.
std::pair<double, double> estimation_diagnostics(const EstimatorState& s, const Vec6& v_measured,
                                                 const ThetaVector& theta_true);

} // namespace fleetform

#endif // FLEETFORM_ESTIMATOR_HPP
