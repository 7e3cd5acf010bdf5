// simcal/whitening.cc

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

#include "simcal/whitening.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

namespace simcal {

namespace {

struct Moments {
  Vector mean;
  Matrix sigma;  // population covariance
};

Moments compute_moments(const Matrix& vectors) {
  require(vectors.rows() >= 1, ErrorCode::DegenerateInput,
          "cannot fit whitening on an empty matrix");
  require(vectors.allFinite(), ErrorCode::NonFinite,
          "whitening input contains NaN or Inf");
  Moments m;
  m.mean = vectors.colwise().mean();
  const Matrix centered = vectors.rowwise() - m.mean.transpose();
  m.sigma = (centered.transpose() * centered) / double(vectors.rows());
  return m;
}

WhitenModel from_moments(const Moments& m, double lambda_reg,
                         std::int64_t n_fit) {
  require(lambda_reg > 0.0, ErrorCode::BadConfig, "lambda_reg must be > 0");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m.sigma);
  require(eig.info() == Eigen::Success, ErrorCode::DegenerateInput,
          "eigendecomposition of the covariance failed");
  // clamp tiny negative eigenvalues from symmetrization before the ridge
  Vector evals = eig.eigenvalues().cwiseMax(0.0);
  Vector inv_sqrt = (evals.array() + lambda_reg).rsqrt();
  WhitenModel model;
  model.mean = m.mean;
  model.w = eig.eigenvectors() * inv_sqrt.asDiagonal() *
            eig.eigenvectors().transpose();
  model.lambda = lambda_reg;
  model.n_fit = n_fit;
  return model;
}

double resolve_lambda(const Matrix& sigma, std::optional<double> lambda_reg) {
  if (lambda_reg) return *lambda_reg;
  const double relative = 1e-2 * sigma.trace() / double(sigma.rows());
  return std::max(relative, 1e-6);
}

}  // namespace

WhitenModel fit(const Matrix& vectors, double lambda_reg) {
  const Moments m = compute_moments(vectors);
  return from_moments(m, lambda_reg, vectors.rows());
}

WhitenModel fit_auto(const Matrix& vectors, std::optional<double> lambda_reg) {
  const Moments m = compute_moments(vectors);
  return from_moments(m, resolve_lambda(m.sigma, lambda_reg), vectors.rows());
}

Matrix apply(const WhitenModel& model, const Matrix& vectors) {
  require(vectors.cols() == model.dim(), ErrorCode::DimMismatch,
          "whitening model dimension " + std::to_string(model.dim()) +
              " does not match input dimension " +
              std::to_string(vectors.cols()));
  // w is symmetric, so row-vector application is (x - mean)^T * w
  return (vectors.rowwise() - model.mean.transpose()) * model.w;
}

std::map<int, WhitenModel> saw_fit_per_subject(const EmbeddingSet& queries,
                                               std::optional<double> lambda_reg,
                                               Index window) {
  require(queries.role == Role::Query, ErrorCode::BadSubjectIds,
          "per-subject whitening is defined on query sets");
  validate(queries);
  const int n_subjects = num_subjects(queries);
  std::map<int, WhitenModel> models;
  for (int s = 0; s < n_subjects; ++s) {
    std::vector<Index> rows;
    for (Index i = 0; i < queries.rows(); ++i)
      if (queries.subject_of[i] == s) rows.push_back(i);
    Index take = static_cast<Index>(rows.size());
    if (window > 0) take = std::min(take, window);
    Matrix sub(take, queries.dim());
    for (Index i = 0; i < take; ++i) sub.row(i) = queries.vectors.row(rows[i]);
    if (take * 4 < queries.dim())
      std::cerr << "simcal: warning: subject " << s << " has only " << take
                << " samples for a " << queries.dim()
                << "-dim whitening fit\n";
    models.emplace(s, fit_auto(sub, lambda_reg));
  }
  return models;
}

Matrix l2_normalize(const Matrix& vectors) {
  Matrix out = vectors;
  for (Index i = 0; i < out.rows(); ++i) {
    const double norm = out.row(i).norm();
    require(norm >= std::numeric_limits<double>::min(), ErrorCode::ZeroVector,
            "row " + std::to_string(i) + " has zero norm");
    out.row(i) /= norm;
  }
  return out;
}

}  // namespace simcal
