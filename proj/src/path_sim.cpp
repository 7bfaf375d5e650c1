#include "levycredit/path_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "levycredit/errors.hpp"

namespace levycredit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One subordinator increment over dt, as a nonnegative number.
double sample_increment(const SubordinatorSpec& sub, double dt,
                        RngStream& rng) {
  switch (sub.kind) {
    case SubordinatorKind::Zero:
      return 0.0;
    case SubordinatorKind::CompoundPoissonExp: {
      const long n = rng.next_poisson(sub.rate * dt);
      double total = 0.0;
      for (long i = 0; i < n; ++i) total += rng.next_exponential() / sub.beta;
      return total;
    }
    case SubordinatorKind::Gamma:
      return rng.next_gamma(sub.gamma_shape_per_time() * dt, sub.gamma_rate());
  }
  return 0.0;
}

// Event-driven state machine shared by the full and min-only simulators.
// Calls visit(time, pre_jump_value, post_jump_value, jump_size) for each
// jump in order, then returns the terminal drift-extended value.
template <class Visitor>
double walk_events(const LevyModel& model, double horizon, RngStream& rng,
                   Visitor&& visit) {
  const double c = model.drift();
  const SubordinatorSpec& neg = model.neg_jumps();
  const SubordinatorSpec& pos = model.pos_jumps();

  double t_neg = neg.is_zero() ? kInf : rng.next_exponential() / neg.rate;
  double t_pos = pos.is_zero() ? kInf : rng.next_exponential() / pos.rate;
  double t = 0.0;
  double x = 0.0;
  for (;;) {
    const double t_next = std::min(t_neg, t_pos);
    if (t_next > horizon) break;
    const bool is_neg = t_neg <= t_pos;
    const double pre = x + c * (t_next - t);
    const double size = is_neg ? -rng.next_exponential() / neg.beta
                               : rng.next_exponential() / pos.beta;
    visit(t_next, pre, pre + size, size);
    x = pre + size;
    t = t_next;
    if (is_neg)
      t_neg = t_next + rng.next_exponential() / neg.rate;
    else
      t_pos = t_next + rng.next_exponential() / pos.rate;
  }
  return x + c * (horizon - t);
}

std::size_t grid_step_count(double horizon, double steps_per_year) {
  const double steps = std::ceil(horizon * steps_per_year);
  return steps < 1.0 ? 1 : static_cast<std::size_t>(steps);
}

void check_preconditions(const LevyModel& model, double horizon,
                         const SimScheme& scheme) {
  if (!(horizon > 0.0))
    throw ParameterError("simulate_path: horizon must be > 0");
  if (scheme.is_event_driven() &&
      model.family() != ModelFamily::DriftedCompoundPoisson)
    throw ParameterError(
        "simulate_path: event-driven scheme requires the compound Poisson "
        "family");
}

}  // namespace

SimScheme SimScheme::grid(double steps_per_year) {
  if (!(steps_per_year > 0.0))
    throw ParameterError("SimScheme::grid: steps_per_year must be > 0");
  return SimScheme(false, steps_per_year);
}

void Path::validate() const {
  const std::size_t n = times.size();
  if (n == 0 || values.size() != n || run_min.size() != n)
    throw PathIntegrityError("path: times/values/run_min sizes disagree");
  if (times[0] != 0.0 || values[0] != 0.0)
    throw PathIntegrityError("path: must start at (t, X) = (0, 0)");
  double prefix_min = std::min(0.0, values[0]);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && times[i] < times[i - 1])
      throw PathIntegrityError("path: times must be nondecreasing");
    prefix_min = std::min(prefix_min, values[i]);
    if (run_min[i] != prefix_min)
      throw PathIntegrityError(
          "path: run_min is not the prefix minimum of values");
  }
}

Path simulate_path(const LevyModel& model, double horizon,
                   const SimScheme& scheme, RngStream& rng) {
  check_preconditions(model, horizon, scheme);

  Path path;
  path.horizon = horizon;
  path.seed = {rng.base_seed(), rng.stream_index()};

  if (scheme.is_event_driven()) {
    path.scheme = PathScheme::EventDriven;
    path.times.push_back(0.0);
    path.values.push_back(0.0);
    const double x_end = walk_events(
        model, horizon, rng,
        [&](double t, double pre, double post, double size) {
          path.times.push_back(t);
          path.values.push_back(pre);
          path.times.push_back(t);
          path.values.push_back(post);
          path.jumps.push_back({t, size});
        });
    path.times.push_back(horizon);
    path.values.push_back(x_end);
  } else {
    path.scheme = PathScheme::Grid;
    const std::size_t steps = grid_step_count(horizon, scheme.steps_per_year());
    const double dt = horizon / static_cast<double>(steps);
    path.grid_dt = dt;
    path.times.reserve(steps + 1);
    path.values.reserve(steps + 1);
    path.times.push_back(0.0);
    path.values.push_back(0.0);
    double x = 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
      double inc = model.drift() * dt;
      inc -= sample_increment(model.neg_jumps(), dt, rng);
      inc += sample_increment(model.pos_jumps(), dt, rng);
      x += inc;
      path.times.push_back(k == steps ? horizon : dt * static_cast<double>(k));
      path.values.push_back(x);
    }
  }

  path.run_min.resize(path.values.size());
  double prefix_min = 0.0;
  for (std::size_t i = 0; i < path.values.size(); ++i) {
    prefix_min = std::min(prefix_min, path.values[i]);
    path.run_min[i] = prefix_min;
  }
  return path;
}

double simulate_running_min(const LevyModel& model, double horizon,
                            const SimScheme& scheme, RngStream& rng) {
  check_preconditions(model, horizon, scheme);

  double running_min = 0.0;
  if (scheme.is_event_driven()) {
    const double x_end = walk_events(
        model, horizon, rng,
        [&](double, double pre, double post, double) {
          running_min = std::min(running_min, std::min(pre, post));
        });
    return std::min(running_min, x_end);
  }

  const std::size_t steps = grid_step_count(horizon, scheme.steps_per_year());
  const double dt = horizon / static_cast<double>(steps);
  double x = 0.0;
  for (std::size_t k = 1; k <= steps; ++k) {
    double inc = model.drift() * dt;
    inc -= sample_increment(model.neg_jumps(), dt, rng);
    inc += sample_increment(model.pos_jumps(), dt, rng);
    x += inc;
    running_min = std::min(running_min, x);
  }
  return running_min;
}

Barrier sample_barrier(RngStream& rng) {
  return Barrier{std::log(rng.next_uniform())};
}

std::optional<double> default_time(const Path& path, const Barrier& barrier) {
  const double level = barrier.log_level;
  const std::size_t n = path.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (path.values[i] <= level) return path.times[i];
    if (path.scheme == PathScheme::EventDriven && i + 1 < n) {
      const double seg_dt = path.times[i + 1] - path.times[i];
      if (seg_dt > 0.0 && path.values[i + 1] <= level) {
        // Descending linear segment; solve value(t) = level exactly.
        const double slope = (path.values[i + 1] - path.values[i]) / seg_dt;
        return path.times[i] + (level - path.values[i]) / slope;
      }
    }
  }
  return std::nullopt;
}

}  // namespace levycredit
