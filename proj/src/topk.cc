// simcal/topk.cc

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

#include "simcal/topk.hpp"

#include <algorithm>
#include <numeric>

namespace simcal {

std::vector<Index> top_k_indices(const Vector& v, int k) {
  require(k >= 1 && k <= v.size(), ErrorCode::BadK,
          "top-k cutoff " + std::to_string(k) + " out of range for length " +
              std::to_string(v.size()));
  std::vector<Index> idx(v.size());
  std::iota(idx.begin(), idx.end(), Index{0});
  auto before = [&v](Index a, Index b) {
    if (v[a] != v[b]) return v[a] > v[b];
    return a < b;
  };
  std::partial_sort(idx.begin(), idx.begin() + k, idx.end(), before);
  idx.resize(k);
  return idx;
}

double top_m_mean(const Vector& v, int m) {
  require(m >= 1 && m <= v.size(), ErrorCode::BadM,
          "top-m cutoff " + std::to_string(m) + " out of range for length " +
              std::to_string(v.size()));
  std::vector<double> vals(v.data(), v.data() + v.size());
  std::partial_sort(vals.begin(), vals.begin() + m, vals.end(),
                    std::greater<double>());
  double sum = 0.0;
  for (int i = 0; i < m; ++i) sum += vals[i];
  return sum / m;
}

Eigen::VectorXi top_k_membership_counts(const Matrix& scores, int k) {
  require(k >= 1 && k <= scores.cols(), ErrorCode::BadK,
          "membership cutoff out of range");
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(scores.cols());
  for (Index q = 0; q < scores.rows(); ++q) {
    const Vector row = scores.row(q).transpose();
    for (Index c : top_k_indices(row, k)) counts[c] += 1;
  }
  return counts;
}

int rank_of(const Vector& v, Index idx) {
  const double s = v[idx];
  int rank = 1;
  for (Index j = 0; j < v.size(); ++j) {
    if (v[j] > s || (v[j] == s && j < idx)) ++rank;
  }
  return rank;
}

}  // namespace simcal
