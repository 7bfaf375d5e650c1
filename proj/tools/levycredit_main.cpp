// Command-line front end: model parsing, experiment orchestration and
// CSV/JSON emission. See README.md for the file formats.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "levycredit/errors.hpp"
#include "levycredit/experiment.hpp"

namespace {

using levycredit::ExperimentConfig;

// --model accepts either a path to a JSON document or inline JSON
// (anything starting with '{').
levycredit::LevyModel parse_model_arg(const std::string& arg) {
  nlohmann::json doc;
  if (!arg.empty() && arg.front() == '{') {
    doc = nlohmann::json::parse(arg);
  } else {
    std::ifstream in(arg);
    if (!in)
      throw levycredit::ParameterError("--model: cannot open file " + arg);
    doc = nlohmann::json::parse(in);
  }
  return levycredit::model_from_json(doc);
}

void load_config_file(ExperimentConfig& cfg, const std::string& file) {
  std::ifstream in(file);
  if (!in)
    throw levycredit::ParameterError("--config: cannot open file " + file);
  levycredit::apply_config_json(cfg, nlohmann::json::parse(in));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Structural credit model on finite-variation Levy paths: closed-form "
      "path-dependent default intensity, credit-spread term structures and "
      "a Monte Carlo validation suite"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string config_file;
  std::string model_arg;

  app.add_option("--config", config_file, "JSON config file (flags override)");
  app.add_option("--model", model_arg,
                 "model JSON: file path or inline document");
  app.add_option("--seed", cfg.seed, "base seed for all streams");
  app.add_option("--threads", cfg.threads,
                 "worker threads (0 = hardware; LEVY_DEFAULT_THREADS caps)");
  app.add_option("--out", cfg.out_dir, "output directory");

  auto* simulate = app.add_subcommand(
      "simulate", "simulate one path and its intensity series");
  simulate->add_option("--horizon", cfg.horizon, "years to simulate");
  simulate->add_option("--steps-per-year", cfg.steps_per_year,
                       "grid resolution");
  simulate->add_flag("--event-driven", cfg.event_driven,
                     "exact event-driven scheme (compound Poisson only)");

  double gap_max = 1.0;
  int gap_count = 129;
  auto* intensity = app.add_subcommand(
      "intensity", "tabulate Pi(gap) and lambda(gap) over a gap grid");
  intensity->add_option("--gap-max", gap_max, "largest gap to tabulate");
  intensity->add_option("--gap-count", gap_count, "number of grid points");

  auto* spread = app.add_subcommand(
      "spread", "credit-spread term structure at a fixed state gap");
  spread->add_option("--gap", cfg.gap, "state gap X_t - min X");
  spread->add_option("--samples", cfg.samples, "paths per horizon");
  spread->add_option("--horizons", cfg.horizons,
                     "spread horizons in years (increasing)");
  spread->add_option("--inner-steps", cfg.inner_steps,
                     "grid steps per inner path");

  auto* validate = app.add_subcommand(
      "validate", "run the Monte Carlo oracle suite against the closed form");
  validate->add_option("--samples", cfg.samples, "samples per check");
  validate->add_option("--h-schedule", cfg.h_schedule,
                       "decreasing likelihood horizons");
  validate->add_option("--inner-steps", cfg.inner_steps,
                       "grid steps per inner path");
  validate->add_option("--steps-per-year", cfg.oracle_steps_per_year,
                       "resolution for horizon-scale checks");
  validate->add_flag("--fail-on-inconclusive", cfg.fail_on_inconclusive,
                     "exit nonzero when low-power checks cannot conclude");
  validate
      ->add_option("--pi-scale", cfg.pi_scale,
                   "mutation hook: scales the closed-form Pi (testing only)")
      ->group("");  // hidden

  auto* figures = app.add_subcommand(
      "figures", "emit the illustration CSVs (sample path, intensity, spread)");
  figures->add_option("--horizon", cfg.horizon, "years for the sample path");
  figures->add_option("--steps-per-year", cfg.steps_per_year,
                      "grid resolution");
  figures->add_option("--gap", cfg.gap,
                      "state gap for the spread curve (default 0.0585)");
  figures->add_option("--samples", cfg.samples, "paths per spread horizon");

  // allow the global flags (--model, --seed, --out, ...) after the
  // subcommand name as well
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_file.empty()) load_config_file(cfg, config_file);
    if (!model_arg.empty()) cfg.model = parse_model_arg(model_arg);

    if (simulate->parsed()) return levycredit::cmd_simulate(cfg);
    if (intensity->parsed())
      return levycredit::cmd_intensity(cfg, gap_max, gap_count);
    if (spread->parsed()) return levycredit::cmd_spread(cfg);
    if (validate->parsed()) return levycredit::cmd_validate(cfg);
    if (figures->parsed()) {
      if (!figures->count("--samples")) cfg.samples = 20000;
      return levycredit::cmd_figures(cfg);
    }
  } catch (const levycredit::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: invalid JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const levycredit::QuadratureError& e) {
    std::cerr << "error: " << e.what()
              << " (achieved error " << e.achieved_error() << ")\n";
    return 3;
  } catch (const levycredit::McFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
