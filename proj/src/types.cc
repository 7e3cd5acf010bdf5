// simcal/types.cc

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

#include "simcal/types.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace simcal {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DuplicateClass: return "DuplicateClass";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DimTooSmall: return "DimTooSmall";
    case ErrorCode::BadSubjectIds: return "BadSubjectIds";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ConstantMatrix: return "ConstantMatrix";
    case ErrorCode::WrongStage: return "WrongStage";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::MissingLabels: return "MissingLabels";
    case ErrorCode::ClassSetMismatch: return "ClassSetMismatch";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::UnknownSubject: return "UnknownSubject";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::SidecarMismatch: return "SidecarMismatch";
  }
  return "UnknownError";
}

bool is_io_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::BadMagic:
    case ErrorCode::VersionUnsupported:
    case ErrorCode::TruncatedPayload:
    case ErrorCode::SidecarMismatch:
      return true;
    default:
      return false;
  }
}

int num_subjects(const EmbeddingSet& set) {
  int max_id = -1;
  for (int s : set.subject_of) max_id = std::max(max_id, s);
  return max_id + 1;
}

EmbeddingSet canonicalize_subjects(EmbeddingSet set,
                                   const std::vector<std::string>& raw_subjects) {
  require(static_cast<Index>(raw_subjects.size()) == set.rows(),
          ErrorCode::BadSubjectIds, "subject tag count does not match row count");
  std::set<std::string> distinct(raw_subjects.begin(), raw_subjects.end());
  std::map<std::string, int> dense;
  int next = 0;
  for (const auto& name : distinct) dense[name] = next++;
  set.subject_of.resize(raw_subjects.size());
  for (std::size_t i = 0; i < raw_subjects.size(); ++i)
    set.subject_of[i] = dense[raw_subjects[i]];
  set.subject_names = std::move(dense);
  return set;
}

void validate(const EmbeddingSet& set) {
  require(set.rows() >= 1, ErrorCode::EmptySet, "embedding set has no rows");
  require(set.dim() >= 2, ErrorCode::DimTooSmall,
          "embedding dimension must be at least 2, got " + std::to_string(set.dim()));
  require(set.vectors.allFinite(), ErrorCode::NonFinite,
          "embedding matrix contains NaN or Inf");
  require(static_cast<Index>(set.subject_of.size()) == set.rows(),
          ErrorCode::BadSubjectIds, "subject_of length does not match row count");
  if (set.label_of) {
    require(static_cast<Index>(set.label_of->size()) == set.rows(),
            ErrorCode::ShapeMismatch, "label_of length does not match row count");
    for (int c : *set.label_of)
      require(c >= 0, ErrorCode::DuplicateClass, "negative class id");
  }

  if (set.role == Role::Candidate) {
    for (int s : set.subject_of)
      require(s == kPoolSubject, ErrorCode::BadSubjectIds,
              "candidate rows must carry the pool subject sentinel");
    if (set.label_of) {
      std::unordered_set<int> seen;
      for (int c : *set.label_of)
        require(seen.insert(c).second, ErrorCode::DuplicateClass,
                "class id " + std::to_string(c) + " appears more than once");
    }
  } else {
    // dense contiguous 0..S-1 after canonicalization
    std::set<int> ids(set.subject_of.begin(), set.subject_of.end());
    require(!ids.empty() && *ids.begin() == 0 &&
                *ids.rbegin() == static_cast<int>(ids.size()) - 1,
            ErrorCode::BadSubjectIds,
            "query subject ids must form a contiguous 0..S-1 set");
  }
}

const char* to_string(Stage stage) {
  switch (stage) {
    case Stage::Base: return "base";
    case Stage::New: return "new";
    case Stage::Geom: return "geom";
    case Stage::Struct: return "struct";
    case Stage::Final: return "final";
  }
  return "?";
}

Stage stage_from_byte(std::uint8_t b) {
  require(b <= 4, ErrorCode::VersionUnsupported,
          "stage byte out of range: " + std::to_string(int(b)));
  return static_cast<Stage>(b);
}

void check_stage(const SimMatrix& s, Stage expected, const char* op) {
  require(s.stage == expected, ErrorCode::WrongStage,
          std::string(op) + " expects a " + to_string(expected) +
              "-stage matrix, got " + to_string(s.stage));
}

SimMatrix make_sim_matrix(Matrix scores, Stage stage,
                          std::vector<int> query_ids,
                          std::vector<int> class_ids) {
  SimMatrix s;
  if (query_ids.empty()) {
    query_ids.resize(scores.rows());
    std::iota(query_ids.begin(), query_ids.end(), 0);
  }
  if (class_ids.empty()) {
    class_ids.resize(scores.cols());
    std::iota(class_ids.begin(), class_ids.end(), 0);
  }
  require(static_cast<Index>(query_ids.size()) == scores.rows() &&
              static_cast<Index>(class_ids.size()) == scores.cols(),
          ErrorCode::ShapeMismatch, "id maps do not match score shape");
  s.scores = std::move(scores);
  s.stage = stage;
  s.query_ids = std::move(query_ids);
  s.class_ids = std::move(class_ids);
  return s;
}

const char* to_string(CslsMode mode) {
  switch (mode) {
    case CslsMode::Off: return "off";
    case CslsMode::Fixed: return "fixed";
    case CslsMode::Adaptive: return "adaptive";
  }
  return "?";
}

CslsMode csls_mode_from_string(const std::string& s) {
  if (s == "off") return CslsMode::Off;
  if (s == "fixed") return CslsMode::Fixed;
  if (s == "adaptive") return CslsMode::Adaptive;
  fail(ErrorCode::BadConfig, "csls_mode must be off|fixed|adaptive, got '" + s + "'");
}

void CalibConfig::validate() const {
  auto check = [](bool ok, const std::string& msg) {
    require(ok, ErrorCode::BadConfig, msg);
  };
  if (lambda_reg) check(*lambda_reg > 0.0, "lambda_reg must be > 0");
  check(tau > 0.0, "tau must be > 0");
  check(logit_scale > 0.0, "logit_scale must be > 0");
  check(k_min >= 1 && k_min <= k_max, "need 1 <= k_min <= k_max");
  check(m_density >= k_max, "m_density must be >= k_max");
  check(k_fixed >= 1, "k_fixed must be >= 1");
  check(top_l >= 1, "L must be >= 1");
  check(k_pop >= 1, "K_pop must be >= 1");
  check(h_thr >= 0.0 && h_thr <= 1.0, "h_thr must lie in [0,1]");
  check(lam_anchor > 0.0 && lam_pen > 0.0, "lam_anchor and lam_pen must be > 0");
  check(poe_alpha >= 0.0 && poe_beta >= 0.0, "poe weights must be >= 0");
}

}  // namespace simcal
