// simcal/whitening.hpp

// Copyright 2026 The simcal authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMCAL_WHITENING_HPP_
#define SIMCAL_WHITENING_HPP_

#include <cstdint>
#include <map>
#include <optional>

#include "simcal/types.hpp"

namespace simcal {

// Fitted mean and ridge-regularized inverse-square-root covariance for one
// subject, or for the candidate pool. w is symmetric positive definite.
struct WhitenModel {
  Vector mean;
  Matrix w;            // (Sigma + lambda I)^(-1/2)
  double lambda = 0.0;
  std::int64_t n_fit = 0;

  Index dim() const { return mean.size(); }
};

// Mean is the column mean; Sigma the population covariance (divide by N).
// Eigenvalues are clamped at zero before the ridge is added, so w is PD for
// any N >= 1 and any lambda > 0.
WhitenModel fit(const Matrix& vectors, double lambda_reg);

// Resolves an absent ridge to max(1e-2 * trace(Sigma)/d, 1e-6).
WhitenModel fit_auto(const Matrix& vectors,
                     std::optional<double> lambda_reg = std::nullopt);

// Each row x maps to w * (x - mean). No normalization here.
Matrix apply(const WhitenModel& model, const Matrix& vectors);

// One model per subject, fit only on that subject's rows. window > 0 fits
// each model on the first window rows of its subject (calibration-window
// mode); 0 uses all rows. Warns to stderr when a subject has fewer than
// d/4 samples.
std::map<int, WhitenModel> saw_fit_per_subject(
    const EmbeddingSet& queries,
    std::optional<double> lambda_reg = std::nullopt, Index window = 0);

// Rows scaled to unit Euclidean norm; a zero row is a hard error.
Matrix l2_normalize(const Matrix& vectors);

}  // namespace simcal

#endif  // SIMCAL_WHITENING_HPP_
