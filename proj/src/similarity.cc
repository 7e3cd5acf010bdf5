// simcal/similarity.cc

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

#include "simcal/similarity.hpp"

#include <cmath>

namespace simcal {

namespace {

void check_unit_rows(const Matrix& m, const char* what) {
  for (Index i = 0; i < m.rows(); ++i) {
    require(std::abs(m.row(i).norm() - 1.0) <= 1e-6, ErrorCode::NotNormalized,
            std::string(what) + " row " + std::to_string(i) +
                " is not unit norm");
  }
}

}  // namespace

SimMatrix base_similarity(const Matrix& queries_norm,
                          const Matrix& candidates_norm, double logit_scale,
                          double tau, std::vector<int> query_ids,
                          std::vector<int> class_ids) {
  require(tau > 0.0, ErrorCode::BadConfig, "tau must be > 0");
  require(queries_norm.cols() == candidates_norm.cols(), ErrorCode::DimMismatch,
          "query and candidate dimensions differ");
  check_unit_rows(queries_norm, "query");
  check_unit_rows(candidates_norm, "candidate");
  Matrix scores =
      (logit_scale / tau) * (queries_norm * candidates_norm.transpose());
  return make_sim_matrix(std::move(scores), Stage::Base, std::move(query_ids),
                         std::move(class_ids));
}

ZScoreStats zscore_fit(const SimMatrix& s) {
  const Matrix& m = s.scores;
  require(m.size() >= 2, ErrorCode::ConstantMatrix,
          "need at least two entries to fit score statistics");
  ZScoreStats stats;
  stats.mu = m.mean();
  stats.sigma = std::sqrt((m.array() - stats.mu).square().mean());
  require(stats.sigma > 0.0, ErrorCode::ConstantMatrix,
          "score matrix is constant; z-score undefined");
  return stats;
}

SimMatrix make_snew(const SimMatrix& base,
                    const std::optional<ZScoreStats>& stats) {
  check_stage(base, Stage::Base, "make_snew");
  SimMatrix out = base;
  out.stage = Stage::New;
  if (stats) {
    require(stats->sigma > 0.0, ErrorCode::ConstantMatrix,
            "z-score sigma must be > 0");
    out.scores = (out.scores.array() - stats->mu) / stats->sigma;
  }
  return out;
}

}  // namespace simcal
