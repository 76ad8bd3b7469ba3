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

#include "subsum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

namespace subsum::cli {
namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double as_real(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + " is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(where + " is not finite");
  return x;
}

Matrix parse_rows(const json& rows, Index width, const std::string& where) {
  if (!rows.is_array() || rows.empty())
    throw InputError(where + " must be a non-empty array of rows");
  Matrix m(static_cast<Index>(rows.size()), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows[r];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != width)
      throw InputError(rw + " must have " + std::to_string(width) + " entries");
    for (std::size_t c = 0; c < row.size(); ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) =
          as_real(row[c], rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

json rows_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json metadata(const std::string& input_bytes) {
  return {{"input_hash", "fnv1a64:" + fnv1a_hex(input_bytes)},
          {"tool_version", kToolVersion},
          {"timestamp", utc_timestamp()}};
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

int exit_code_for(const CriterionReport& r) {
  switch (r.verdict) {
    case Verdict::kSatisfied:
      return kExitOk;
    case Verdict::kBoundary:
      return kExitBoundary;
    case Verdict::kNotSatisfied:
      break;
  }
  return kExitCriterionFailed;
}

struct LoadedInput {
  LoadedFamily loaded;
  std::string bytes;
};

LoadedInput load_family_path(const std::string& path, std::ostream& err) {
  std::string bytes = read_text_file(path);
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  LoadedFamily loaded = load_family(parse_family(j));
  for (const auto& w : loaded.warnings) err << "warning: " << w << "\n";
  return {std::move(loaded), std::move(bytes)};
}

int cmd_analyze(const std::string& input, const std::string& report_path,
                std::ostream& out, std::ostream& err) {
  const LoadedInput in = load_family_path(input, err);
  const CriterionReport criterion =
      evaluate_criterion(build_e_matrix(in.loaded.family));
  json report = {{"criterion", to_json(criterion)},
                 {"metadata", metadata(in.bytes)}};
  emit_json(report, report_path, out);
  return exit_code_for(criterion);
}

int cmd_project(const std::string& input, int n_max,
                const std::string& report_path, const std::string& csv_path,
                std::ostream& out, std::ostream& err) {
  if (n_max < 1) throw InputError("--n-max must be at least 1");
  const LoadedInput in = load_family_path(input, err);
  const SubspaceFamily& family = in.loaded.family;
  const CriterionReport criterion = evaluate_criterion(build_e_matrix(family));
  json report = {{"criterion", to_json(criterion)}};
  if (!criterion.satisfied) {
    err << "criterion not satisfied (r(E) = " << criterion.spectral_radius
        << "); no convergence bound is certified\n";
    report["metadata"] = metadata(in.bytes);
    emit_json(report, report_path, out);
    return exit_code_for(criterion);
  }
  const ConvergenceReport conv = convergence_report(family, n_max, criterion);
  report.update(to_json(conv));
  report["metadata"] = metadata(in.bytes);
  emit_json(report, report_path, out);
  if (!csv_path.empty()) write_text_file(csv_path, convergence_csv(conv));
  return kExitOk;
}

std::vector<double> parse_schedule(const std::string& schedule, int blocks,
                                   bool blocks_given) {
  if (schedule == "geometric") return geometric_alpha_schedule(blocks);
  const std::string prefix = "custom=";
  if (schedule.rfind(prefix, 0) != 0)
    throw InputError("--alpha-schedule must be 'geometric' or 'custom=<list>'");
  std::vector<double> alphas;
  std::stringstream ss(schedule.substr(prefix.size()));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double a = 0.0;
    try {
      a = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw InputError("bad alpha value '" + item + "'");
    alphas.push_back(a);
  }
  if (alphas.empty()) throw InputError("custom alpha schedule is empty");
  if (blocks_given && static_cast<int>(alphas.size()) != blocks)
    throw InputError("--blocks " + std::to_string(blocks) +
                     " does not match the " + std::to_string(alphas.size()) +
                     " custom alphas");
  return alphas;
}

int cmd_counterexample(const std::string& input, int blocks, bool blocks_given,
                       const std::string& schedule, const std::string& out_path,
                       const std::string& verify_path, std::ostream& out,
                       std::ostream& err) {
  if (blocks < 1) throw InputError("--blocks must be at least 1");
  const EMatrix e = parse_e_matrix(read_json_file(input));
  std::vector<double> alphas = parse_schedule(schedule, blocks, blocks_given);

  std::optional<CounterexampleSpec> spec;
  try {
    spec.emplace(e, std::move(alphas));
  } catch (const InvalidArgument& ex) {
    throw InputError(ex.what());
  } catch (const NotBoundary& ex) {
    throw InputError(ex.what());
  }
  if (spec->rescaled())
    err << "notice: r(E) = " << std::setprecision(17) << spec->input_radius()
        << " > 1; constructing for E / r(E)\n";

  const CounterexampleFamily cf = build_counterexample(*spec);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cf.family.size(); ++i)
    names.push_back("X" + std::to_string(i + 1));
  write_text_file(out_path, to_json(to_family_file(cf.family, names)).dump(2) + "\n");

  json verification = {{"rescaled", spec->rescaled()},
                       {"input_radius", spec->input_radius()},
                       {"e_matrix", to_json(spec->e())},
                       {"alphas", spec->alphas()}};
  int code = kExitOk;
  try {
    verification["record"] = to_json(verify_counterexample(cf, *spec));
    verification["passed"] = true;
  } catch (const VerificationFailed& ex) {
    verification["passed"] = false;
    verification["failure"] = ex.what();
    err << "verification failed: " << ex.what() << "\n";
    code = kExitCriterionFailed;
  }
  if (!verify_path.empty())
    write_text_file(verify_path, verification.dump(2) + "\n");
  else
    out << verification.dump(2) << "\n";
  return code;
}

}  // namespace

FamilyFile parse_family(const json& j) {
  FamilyFile f;
  const json& dim = require(j, "ambient_dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1)
    throw InputError("ambient_dim must be a positive integer");
  f.ambient_dim = static_cast<Index>(dim.get<long long>());
  const json& subs = require(j, "subspaces");
  if (!subs.is_array() || subs.empty())
    throw InputError("subspaces must be a non-empty array");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const json& s = subs[i];
    SpanningSet set;
    set.name = "X" + std::to_string(i + 1);
    if (s.is_object() && s.contains("name")) {
      if (!s["name"].is_string()) throw InputError("subspace name must be a string");
      set.name = s["name"].get<std::string>();
    }
    set.vectors = parse_rows(require(s, "vectors"), f.ambient_dim,
                             "subspaces[" + std::to_string(i) + "].vectors");
    f.subspaces.push_back(std::move(set));
  }
  return f;
}

json to_json(const FamilyFile& f) {
  json subs = json::array();
  for (const auto& s : f.subspaces)
    subs.push_back({{"name", s.name}, {"vectors", rows_to_json(s.vectors)}});
  return {{"ambient_dim", f.ambient_dim}, {"subspaces", std::move(subs)}};
}

FamilyFile to_family_file(const SubspaceFamily& f,
                          const std::vector<std::string>& names) {
  FamilyFile out;
  out.ambient_dim = f.ambient_dim();
  for (std::size_t i = 0; i < f.size(); ++i)
    out.subspaces.push_back(
        {i < names.size() ? names[i] : "X" + std::to_string(i + 1),
         f[i].basis().transpose()});
  return out;
}

LoadedFamily load_family(const FamilyFile& f) {
  std::vector<Subspace> members;
  std::vector<std::string> names;
  std::vector<std::string> warnings;
  for (const auto& s : f.subspaces) {
    try {
      members.push_back(orthonormalize(s.vectors.transpose()));
    } catch (const AllZeroInput&) {
      throw InputError("subspace '" + s.name + "' is the zero subspace");
    }
    if (members.back().dim() < s.vectors.rows())
      warnings.push_back("subspace '" + s.name + "': numerical rank " +
                         std::to_string(members.back().dim()) + " < " +
                         std::to_string(s.vectors.rows()) + " supplied vectors");
    names.push_back(s.name);
  }
  return {SubspaceFamily(std::move(members)), std::move(names),
          std::move(warnings)};
}

EMatrix parse_e_matrix(const json& j) {
  const json& n = require(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1)
    throw InputError("n must be a positive integer");
  const auto size = static_cast<Index>(n.get<long long>());
  const Matrix entries = parse_rows(require(j, "entries"), size, "entries");
  if (entries.rows() != size)
    throw InputError("entries must have " + std::to_string(size) + " rows");
  try {
    return EMatrix::from_entries(entries);
  } catch (const InvalidEMatrix& e) {
    throw InputError(e.what());
  }
}

json to_json(const EMatrix& e) {
  return {{"n", e.size()}, {"entries", rows_to_json(e.entries())}};
}

json to_json(const CriterionReport& r) {
  json j = {{"spectral_radius", r.spectral_radius},
            {"satisfied", r.satisfied},
            {"verdict", to_string(r.verdict)},
            {"leading_minors", r.leading_minors},
            {"margin", r.margin}};
  j["angle_sum"] = r.angle_sum ? json(*r.angle_sum) : json(nullptr);
  return j;
}

json to_json(const ConvergenceReport& r) {
  json rows = json::array();
  for (const auto& s : r.steps)
    rows.push_back({{"N", s.n}, {"error", s.error}, {"bound", s.bound}});
  return {{"convergence", std::move(rows)},
          {"frame",
           {{"frame_lower", r.frame_lower},
            {"frame_upper", r.frame_upper},
            {"r", r.r},
            {"a_restricted_deviation", r.a_restricted_deviation}}}};
}

json to_json(const VerificationRecord& r) {
  json pairs = json::array();
  for (const auto& p : r.pair_norms)
    pairs.push_back(
        {{"i", p.i}, {"j", p.j}, {"measured", p.measured}, {"target", p.target}});
  json blocks = json::array();
  for (const auto& b : r.blocks)
    blocks.push_back({{"alpha", b.alpha},
                      {"gram_residual", b.gram_residual},
                      {"combination_norm_sq", b.combination_norm_sq}});
  return {{"pair_norms", std::move(pairs)},
          {"blocks", std::move(blocks)},
          {"sigma_min", r.sigma_min},
          {"sigma_min_sq", r.sigma_min_sq},
          {"degeneration_bound", r.degeneration_bound},
          {"independent", r.independent}};
}

std::string convergence_csv(const ConvergenceReport& r) {
  std::ostringstream ss;
  ss.imbue(std::locale::classic());
  ss << std::setprecision(17);
  ss << "N,error,bound\n";
  for (const auto& s : r.steps) ss << s.n << ',' << s.error << ',' << s.bound << '\n';
  return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

json read_json_file(const std::filesystem::path& path) {
  const std::string bytes = read_text_file(path);
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write " + path.string());
  o << text;
  if (!o) throw InputError("failed writing " + path.string());
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Subspace-sum closedness criterion, projection iteration and "
               "boundary counterexamples"};
  app.require_subcommand(1);

  std::string input, report_path, csv_path, out_path, verify_path;
  std::string schedule = "geometric";
  int n_max = 0;
  int blocks = 20;

  auto* analyze = app.add_subcommand("analyze", "evaluate r(E) < 1 for a family");
  analyze->add_option("family", input, "family JSON file")->required();
  analyze->add_option("--report", report_path, "write the JSON report here");

  auto* project = app.add_subcommand(
      "project", "run I-(I-A)^N against the exact projection onto the sum");
  project->add_option("family", input, "family JSON file")->required();
  project->add_option("--n-max", n_max, "number of iteration steps")->required();
  project->add_option("--report", report_path, "write the JSON report here");
  project->add_option("--csv", csv_path, "write N,error,bound rows here");

  auto* counter = app.add_subcommand(
      "counterexample", "build a truncated family realizing a boundary E");
  counter->add_option("ematrix", input, "E-matrix JSON file")->required();
  auto* blocks_opt =
      counter->add_option("--blocks", blocks, "number of blocks K (default 20)");
  counter->add_option("--alpha-schedule", schedule,
                      "geometric | custom=<a1,a2,...>");
  counter->add_option("--out", out_path, "generated family JSON")->required();
  counter->add_option("--verify", verify_path, "verification JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(input, report_path, out, err);
    if (*project)
      return cmd_project(input, n_max, report_path, csv_path, out, err);
    return cmd_counterexample(input, blocks, blocks_opt->count() > 0, schedule,
                              out_path, verify_path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace subsum::cli
