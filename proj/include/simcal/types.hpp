// simcal/types.hpp

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

#ifndef SIMCAL_TYPES_HPP_
#define SIMCAL_TYPES_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace simcal {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorCode {
  // validation / data model
  NonFinite,
  DuplicateClass,
  EmptySet,
  DimTooSmall,
  BadSubjectIds,
  DegenerateInput,
  DimMismatch,
  ZeroVector,
  NotNormalized,
  ConstantMatrix,
  WrongStage,
  BadM,
  BadK,
  ShapeMismatch,
  MissingLabels,
  ClassSetMismatch,
  BadSpec,
  BadConfig,
  UnknownSubject,
  WindowTooLarge,
  // I/O and file formats
  IoError,
  BadMagic,
  VersionUnsupported,
  TruncatedPayload,
  SidecarMismatch,
};

const char* to_string(ErrorCode code);

// True for codes the CLI maps to exit status 3 (I/O / file format);
// everything else is a validation error (exit status 2).
bool is_io_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

enum class Role { Query, Candidate };

// Candidates form a single pool; they carry this sentinel instead of a
// real subject id.
inline constexpr int kPoolSubject = -1;

// Row-major collection of embeddings plus per-row metadata. Queries carry
// dense subject ids 0..S-1 and optional class labels; candidates carry one
// class id per row (one prototype per class) and the pool sentinel subject.
struct EmbeddingSet {
  Matrix vectors;                             // N x d
  std::vector<int> subject_of;                // N entries
  std::optional<std::vector<int>> label_of;   // N class ids, if known
  Role role = Role::Query;
  std::map<std::string, int> subject_names;   // original id -> dense id

  Index rows() const { return vectors.rows(); }
  Index dim() const { return vectors.cols(); }
};

// Number of distinct subjects (max dense id + 1). Candidates have none.
int num_subjects(const EmbeddingSet& set);

// Remaps arbitrary subject tags onto dense 0..S-1 ids (sorted original
// order) and records the mapping in subject_names.
EmbeddingSet canonicalize_subjects(EmbeddingSet set,
                                   const std::vector<std::string>& raw_subjects);

// Throws on any violated EmbeddingSet invariant; total over finite inputs.
void validate(const EmbeddingSet& set);

enum class Stage : std::uint8_t { Base = 0, New = 1, Geom = 2, Struct = 3, Final = 4 };

const char* to_string(Stage stage);
Stage stage_from_byte(std::uint8_t b);

// Dense |Q| x |C| score matrix tagged with its pipeline stage. The id maps
// tie rows back to query indices and columns to class ids; both are
// bijections and are carried unchanged through every stage.
struct SimMatrix {
  Matrix scores;
  Stage stage = Stage::Base;
  std::vector<int> query_ids;
  std::vector<int> class_ids;

  Index n_queries() const { return scores.rows(); }
  Index n_classes() const { return scores.cols(); }
};

// Stage transitions go Base -> New -> {Geom, Struct} -> Final only.
void check_stage(const SimMatrix& s, Stage expected, const char* op);

SimMatrix make_sim_matrix(Matrix scores, Stage stage,
                          std::vector<int> query_ids = {},
                          std::vector<int> class_ids = {});

enum class CslsMode { Off, Fixed, Adaptive };

const char* to_string(CslsMode mode);
CslsMode csls_mode_from_string(const std::string& s);

// All pipeline hyperparameters. lambda_reg absent means the whitening ridge
// is resolved per fit as max(1e-2 * trace(Sigma)/d, 1e-6).
struct CalibConfig {
  std::optional<double> lambda_reg;
  double tau = 1.0;
  double logit_scale = 1.0;
  bool zscore = false;
  int m_density = 50;
  int k_min = 5;
  int k_max = 20;
  int k_fixed = 12;
  int top_l = 5;
  int k_pop = 5;
  double h_thr = 0.5;
  double lam_anchor = 1.0;
  double lam_pen = 1.0;
  double poe_alpha = 1.0;
  double poe_beta = 1.9;
  bool saw = true;
  bool cw = true;
  CslsMode csls_mode = CslsMode::Adaptive;
  bool struct_poe = true;

  // Checks every data-independent invariant; throws BadConfig.
  void validate() const;
};

}  // namespace simcal

#endif  // SIMCAL_TYPES_HPP_
