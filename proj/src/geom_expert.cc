// simcal/geom_expert.cc

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

#include "simcal/geom_expert.hpp"

#include <algorithm>
#include <cmath>

#include "simcal/topk.hpp"

namespace simcal {

namespace {

// round half to even, independent of the runtime FP rounding mode
double round_half_even(double x) {
  const double floor_x = std::floor(x);
  const double frac = x - floor_x;
  if (frac > 0.5) return floor_x + 1.0;
  if (frac < 0.5) return floor_x;
  return (std::fmod(floor_x, 2.0) == 0.0) ? floor_x : floor_x + 1.0;
}

SimMatrix assemble_geom(const SimMatrix& snew, const Vector& r_q,
                        const Vector& r_c) {
  SimMatrix out = snew;
  out.stage = Stage::Geom;
  out.scores = 2.0 * snew.scores;
  out.scores.colwise() -= r_q;
  out.scores.rowwise() -= r_c.transpose();
  return out;
}

}  // namespace

Vector row_density(const SimMatrix& snew, int m) {
  check_stage(snew, Stage::New, "row_density");
  require(m >= 1 && m <= snew.n_classes(), ErrorCode::BadM,
          "density cutoff m=" + std::to_string(m) + " out of range for " +
              std::to_string(snew.n_classes()) + " classes");
  Vector rho(snew.n_queries());
  for (Index q = 0; q < snew.n_queries(); ++q)
    rho[q] = top_m_mean(snew.scores.row(q).transpose(), m);
  return rho;
}

Vector col_density(const SimMatrix& snew, int k_cutoff) {
  check_stage(snew, Stage::New, "col_density");
  const Eigen::VectorXi counts =
      top_k_membership_counts(snew.scores, k_cutoff);
  return counts.cast<double>() / double(snew.n_queries());
}

Eigen::VectorXi density_to_k(const Vector& rho, int k_min, int k_max) {
  require(k_min <= k_max, ErrorCode::BadK, "need k_min <= k_max");
  Eigen::VectorXi k(rho.size());
  const double lo = rho.minCoeff();
  const double hi = rho.maxCoeff();
  if (hi == lo) {
    k.setConstant((k_min + k_max) / 2);
    return k;
  }
  for (Index i = 0; i < rho.size(); ++i) {
    const double t = (rho[i] - lo) / (hi - lo);
    k[i] = k_min + int(round_half_even(t * (k_max - k_min)));
  }
  return k;
}

std::pair<Vector, Vector> csls_terms(const SimMatrix& snew,
                                     const Eigen::VectorXi& k_row,
                                     const Eigen::VectorXi& k_col) {
  check_stage(snew, Stage::New, "csls_terms");
  require(k_row.size() == snew.n_queries() && k_col.size() == snew.n_classes(),
          ErrorCode::ShapeMismatch, "neighborhood size vectors do not match");
  Vector r_q(snew.n_queries());
  for (Index q = 0; q < snew.n_queries(); ++q)
    r_q[q] = top_m_mean(snew.scores.row(q).transpose(), k_row[q]);
  Vector r_c(snew.n_classes());
  for (Index c = 0; c < snew.n_classes(); ++c)
    r_c[c] = top_m_mean(snew.scores.col(c), k_col[c]);
  return {std::move(r_q), std::move(r_c)};
}

DensityProfile density_profile(const SimMatrix& snew, const CalibConfig& cfg) {
  cfg.validate();
  const int n_q = int(snew.n_queries());
  const int n_c = int(snew.n_classes());
  // keep the profile defined for small matrices
  const int m_eff = std::min(cfg.m_density, n_c);
  const int cutoff = std::min(cfg.k_max, n_c);
  DensityProfile p;
  p.rho_row = row_density(snew, m_eff);
  p.rho_col = col_density(snew, cutoff);
  p.k_row = density_to_k(p.rho_row, std::min(cfg.k_min, n_c),
                         std::min(cfg.k_max, n_c));
  p.k_col = density_to_k(p.rho_col, std::min(cfg.k_min, n_q),
                         std::min(cfg.k_max, n_q));
  return p;
}

SimMatrix adaptive_csls(const SimMatrix& snew, const CalibConfig& cfg) {
  const DensityProfile p = density_profile(snew, cfg);
  auto [r_q, r_c] = csls_terms(snew, p.k_row, p.k_col);
  return assemble_geom(snew, r_q, r_c);
}

SimMatrix fixed_csls(const SimMatrix& snew, int k) {
  check_stage(snew, Stage::New, "fixed_csls");
  require(k >= 1 && k <= std::min(snew.n_queries(), snew.n_classes()),
          ErrorCode::BadK,
          "fixed CSLS k=" + std::to_string(k) + " out of range");
  auto [r_q, r_c] =
      csls_terms(snew, Eigen::VectorXi::Constant(snew.n_queries(), k),
                 Eigen::VectorXi::Constant(snew.n_classes(), k));
  return assemble_geom(snew, r_q, r_c);
}

}  // namespace simcal
