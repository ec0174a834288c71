#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "superslice/lie_superalgebra.hpp"

namespace superslice {

using Json = nlohmann::ordered_json;

/// {"basis":[{"label","parity"}], "brackets":[{"i","j","k","c_num","c_den"}], "form":[{"i","j","c_num","c_den"}]}
/// Indices may be given as integers or basis labels.
LieSuperalgebra parse_algebra_json(const Json& j, const std::string& name = "");
LieSuperalgebra parse_algebra_file(const std::string& path);
Json algebra_to_json(const LieSuperalgebra& g);

/// Catalogue name ("sl2", "sl(2|1)", "osp12", ...) or a path to a JSON file.
LieSuperalgebra load_algebra(const std::string& source);

struct JobConfig {
  std::string algebra = "sl2";
  std::string nilpotent = "principal";  // or an expression like "e21 + e32"
  std::string grading = "dynkin";       // or "e12=2,h1=0,e21=-2"
  int trials = 5;
  std::uint64_t seed = 1;
  std::optional<int> max_weight2;  // PVA and cohomology cutoff, doubled
  std::optional<std::string> level;
  std::string coefficients = "regular";  // cohomology: regular | slice
  std::string orbit_point, orbit_by;     // orbit subcommand

  /// Throws Error on a malformed configuration.
  void validate() const;
};

enum class Task {
  AlgebraValidate,
  SliceChart,
  SliceInvariance,
  MiuraShow,
  MiuraCertify,
  Cohomology,
  PvaH0,
  PvaQcheck,
  PvaMiura,
  Orbit,
  Run,
};

/// Report body is deterministic for a fixed config; wall-clock times live apart.
struct Report {
  Json body;
  Json timings = Json::object();
  bool pass = false;

  std::string body_text() const { return body.dump(2); }
  std::string json() const;
  std::string text() const;
};

Report run_task(const JobConfig& config, Task task);
inline Report run_pipeline(const JobConfig& config) { return run_task(config, Task::Run); }

}  // namespace superslice
