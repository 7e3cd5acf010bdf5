// simcal/topk.hpp

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

#ifndef SIMCAL_TOPK_HPP_
#define SIMCAL_TOPK_HPP_

#include <Eigen/Dense>

#include <vector>

#include "simcal/types.hpp"

namespace simcal {

// Every top-k selection in the library uses one total order:
// score descending, then index ascending. This is the deterministic
// tie rule shared by ranks, densities, popularity and the metrics.

// Indices of the k largest entries of v, in that order.
std::vector<Index> top_k_indices(const Vector& v, int k);

// Mean of the m largest entries, summed largest-first for determinism.
double top_m_mean(const Vector& v, int m);

// counts[c] = #{rows q : c is among the top-k entries of row q}.
Eigen::VectorXi top_k_membership_counts(const Matrix& scores, int k);

// 1 + number of entries strictly greater than v[idx], plus ties at lower
// index; the rank of idx under the total order above.
int rank_of(const Vector& v, Index idx);

}  // namespace simcal

#endif  // SIMCAL_TOPK_HPP_
