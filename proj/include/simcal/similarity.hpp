// simcal/similarity.hpp

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

#ifndef SIMCAL_SIMILARITY_HPP_
#define SIMCAL_SIMILARITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "simcal/types.hpp"

namespace simcal {

// Scalar score statistics fitted on an unlabeled score matrix.
struct ZScoreStats {
  double mu = 0.0;
  double sigma = 1.0;   // population std, > 0
  std::string source;
};

// scores[q][c] = (logit_scale / tau) * <q_row, c_row>. Both inputs must be
// row-wise unit norm (checked to 1e-6).
SimMatrix base_similarity(const Matrix& queries_norm,
                          const Matrix& candidates_norm, double logit_scale,
                          double tau, std::vector<int> query_ids = {},
                          std::vector<int> class_ids = {});

// Scalar mean / population std over all entries. Constant matrices are
// rejected (sigma would be zero).
ZScoreStats zscore_fit(const SimMatrix& s);

// Base -> New. With stats, scores map to (scores - mu) / sigma; without,
// pass-through. A global affine map, so every per-query ranking survives.
SimMatrix make_snew(const SimMatrix& base,
                    const std::optional<ZScoreStats>& stats = std::nullopt);

}  // namespace simcal

#endif  // SIMCAL_SIMILARITY_HPP_
