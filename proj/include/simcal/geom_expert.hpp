// simcal/geom_expert.hpp

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

#ifndef SIMCAL_GEOM_EXPERT_HPP_
#define SIMCAL_GEOM_EXPERT_HPP_

#include <utility>

#include "simcal/types.hpp"

namespace simcal {

// Per-query and per-class local densities and the neighborhood sizes
// derived from them. k_row/k_col are monotone nondecreasing in their
// densities and bounded by [k_min, k_max].
struct DensityProfile {
  Vector rho_row;        // |Q|: mean of the m largest entries per row
  Vector rho_col;        // |C|: top-k_max membership frequency, in [0,1]
  Eigen::VectorXi k_row;
  Eigen::VectorXi k_col;
};

// Mean of the m largest entries of each row.
Vector row_density(const SimMatrix& snew, int m);

// rho_col(c) = fraction of rows whose top-k_cutoff list contains c, under
// the deterministic tie order.
Vector col_density(const SimMatrix& snew, int k_cutoff);

// Linear min-max map from densities to integers in [k_min, k_max] with
// half-to-even rounding; an all-equal density vector maps everything to
// floor((k_min + k_max) / 2).
Eigen::VectorXi density_to_k(const Vector& rho, int k_min, int k_max);

// r_q(q) = mean of the k_row(q) largest entries of row q;
// r_c(c) = mean of the k_col(c) largest entries of column c.
std::pair<Vector, Vector> csls_terms(const SimMatrix& snew,
                                     const Eigen::VectorXi& k_row,
                                     const Eigen::VectorXi& k_col);

// Assembles the profile for adaptive CSLS from cfg (m clamped to |C|, k
// values clamped to the row/column lengths).
DensityProfile density_profile(const SimMatrix& snew, const CalibConfig& cfg);

// New -> Geom: 2 * s(q,c) - r_q(q) - r_c(c) with density-adaptive
// neighborhood sizes. With k_min == k_max == k0 this reduces exactly to
// fixed_csls(snew, k0).
SimMatrix adaptive_csls(const SimMatrix& snew, const CalibConfig& cfg);

// New -> Geom: standard CSLS with one neighborhood size on both sides.
SimMatrix fixed_csls(const SimMatrix& snew, int k);

}  // namespace simcal

#endif  // SIMCAL_GEOM_EXPERT_HPP_
