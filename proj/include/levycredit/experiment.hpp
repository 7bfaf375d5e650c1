#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levycredit/intensity.hpp"
#include "levycredit/levy_model.hpp"
#include "levycredit/path_sim.hpp"
#include "levycredit/spread.hpp"

#include <json.hpp>

namespace levycredit {

// Model specification document:
//   {"family": "dcp" | "dgamma" | "vg", "params": {...}}
// with params
//   dcp:    c, rho, beta, and optional rho_pos, beta_pos
//   dgamma: c, mu, nu
//   vg:     c, nu, sigma, theta
// Validation failures name the offending key.
LevyModel model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const LevyModel& model);

// One experiment invocation. Fields are validated against the module
// preconditions before any simulation starts; command handlers only read
// the fields they need.
struct ExperimentConfig {
  std::optional<LevyModel> model;
  std::uint64_t seed = 20240901;
  double horizon = 5.0;
  double steps_per_year = 2000.0;        // path simulation grids
  double oracle_steps_per_year = 256.0;  // horizon-scale oracle grids
  bool event_driven = false;
  double gap = 0.0;
  std::vector<double> h_schedule;  // per-command defaults if empty
  std::vector<double> horizons;    // spread horizons
  std::size_t samples = 100000;
  std::size_t inner_steps = 256;
  unsigned threads = 0;
  double pi_scale = 1.0;  // validation mutation hook
  bool fail_on_inconclusive = false;
  std::string out_dir = ".";

  OracleConfig oracle_config() const;
};

// Merges a config JSON document into cfg (fields present in the document
// overwrite the current values; CLI flags are applied on top by the tool).
void apply_config_json(ExperimentConfig& cfg, const nlohmann::json& doc);

// CSV emission: comma-separated, header row, LF endings, 17 significant
// digits. Identical configs produce byte-identical files.
void write_path_csv(const Path& path, const std::string& file);
void write_intensity_csv(const IntensitySeries& series,
                         const std::string& file);
void write_spread_csv(const SpreadCurve& curve, const std::string& file);

// Re-reads a path CSV (columns t,x,xmin,gap). Scheme and jump records are
// not part of the format; the result carries the Grid tag and is suitable
// for invariant checks and re-plotting.
Path read_path_csv(const std::string& file);

struct CheckResult {
  std::string name;
  double estimate = 0.0;
  double std_error = 0.0;
  double target = 0.0;
  bool pass = false;
  bool inconclusive = false;  // not enough power to distinguish the target
  std::string note;
};

// The full oracle suite against one model; pi_scale != 1 corrupts the
// closed-form side and must make the suite fail.
std::vector<CheckResult> run_validation_suite(const LevyModel& model,
                                              const ExperimentConfig& cfg);

nlohmann::json validation_report(const std::vector<CheckResult>& checks,
                                 const ExperimentConfig& cfg);

// Command handlers; each returns a process exit code.
int cmd_simulate(const ExperimentConfig& cfg);
int cmd_intensity(const ExperimentConfig& cfg, double gap_max, int gap_count);
int cmd_spread(const ExperimentConfig& cfg);
int cmd_validate(const ExperimentConfig& cfg);
int cmd_figures(const ExperimentConfig& cfg);

}  // namespace levycredit
