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

#include "fleetform/estimator.hpp"

namespace fleetform
{

EstimatorRates estimator_rates(const EstimatorState& s, const Vec6& v_measured,
                               const RegressionMatrix& psi, const EstimatorGains& g)
{
  const Vec6 obs_error = s.v_hat - v_measured;
  EstimatorRates rates;
  rates.v_hat_dot = psi * s.theta_hat.coeffs - g.observer.cwiseProduct(obs_error);
  rates.theta_dot = -psi.transpose() * g.adaptation.cwiseProduct(obs_error);
  return rates;
}

std::pair<double, double> estimation_diagnostics(const EstimatorState& s, const Vec6& v_measured,
                                                 const ThetaVector& theta_true)
{
  const double obs = (s.v_hat - v_measured).norm();
  const double param = (s.theta_hat.coeffs - theta_true.coeffs).norm();
  return {obs, param};
}

} // namespace fleetform
