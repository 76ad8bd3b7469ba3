// Copyright 2026 The subsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "subsum/criterion.hpp"
#include "subsum/errors.hpp"
#include "subsum/projection_iteration.hpp"
#include "subsum/sharpness.hpp"
#include "subsum/subspace.hpp"

namespace subsum::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitCriterionFailed = 2,
  kExitBoundary = 3,
};

/// Malformed input file or command-line value.
class InputError : public Error {
 public:
  using Error::Error;
};

/// One named subspace as written on disk: a spanning set stored one vector
/// per row, not necessarily orthonormal.
struct SpanningSet {
  std::string name;
  Matrix vectors;
};

struct FamilyFile {
  Index ambient_dim = 0;
  std::vector<SpanningSet> subspaces;
};

/// {"ambient_dim": d, "subspaces": [{"name": ..., "vectors": [[...], ...]}]}
FamilyFile parse_family(const nlohmann::json& j);
nlohmann::json to_json(const FamilyFile& f);

/// Writes each member's orthonormal basis as its spanning set.
FamilyFile to_family_file(const SubspaceFamily& f,
                          const std::vector<std::string>& names);

struct LoadedFamily {
  SubspaceFamily family;
  std::vector<std::string> names;
  std::vector<std::string> warnings;  // rank reductions during orthonormalization
};

/// Orthonormalizes every spanning set. Throws InputError on zero subspaces.
LoadedFamily load_family(const FamilyFile& f);

/// {"n": n, "entries": [[...], ...]}, validated symmetric hollow nonnegative.
EMatrix parse_e_matrix(const nlohmann::json& j);
nlohmann::json to_json(const EMatrix& e);

nlohmann::json to_json(const CriterionReport& r);
/// {"convergence": [...], "frame": {...}} fragment of a full report.
nlohmann::json to_json(const ConvergenceReport& r);
nlohmann::json to_json(const VerificationRecord& r);

/// Header "N,error,bound", LF line endings, 17 significant digits.
std::string convergence_csv(const ConvergenceReport& r);

/// FNV-1a 64-bit digest of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace subsum::cli
