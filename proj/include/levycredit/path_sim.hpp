#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "levycredit/levy_model.hpp"
#include "levycredit/rng.hpp"

namespace levycredit {

enum class PathScheme { EventDriven, Grid };

struct SeedInfo {
  std::uint64_t base_seed = 0;
  std::uint64_t stream_index = 0;
};

// Signed jump: size < 0 came from the negative subordinator S, size > 0
// from S'. Recorded for event-driven paths only.
struct JumpRecord {
  double time = 0.0;
  double size = 0.0;
};

// Sampled trajectory of X with its running minimum. values[i] is X at
// times[i] (X_0 = 0) and run_min is the exact prefix minimum of values.
//
// Event-driven paths store each jump time twice, with the pre-jump and the
// post-jump value, so the prefix minimum over stored values equals the
// running minimum of the continuous piecewise-linear path: with c < 0 the
// within-segment minimum sits at the right endpoint before the jump, with
// c > 0 at the left endpoint after it, and both are stored points.
struct Path {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> run_min;
  std::vector<JumpRecord> jumps;  // EventDriven only
  PathScheme scheme = PathScheme::Grid;
  double grid_dt = 0.0;  // Grid only
  double horizon = 0.0;
  SeedInfo seed;

  std::size_t size() const { return times.size(); }

  // Throws PathIntegrityError unless times are nondecreasing starting at
  // 0, values[0] == 0, and run_min is bitwise the prefix minimum.
  void validate() const;
};

// Either exact event-driven simulation (compound Poisson families only) or
// a fixed grid with the given steps per year.
class SimScheme {
 public:
  static SimScheme event_driven() { return SimScheme(true, 0.0); }
  static SimScheme grid(double steps_per_year);

  bool is_event_driven() const { return event_driven_; }
  double steps_per_year() const { return steps_per_year_; }

 private:
  SimScheme(bool ed, double spy) : event_driven_(ed), steps_per_year_(spy) {}
  bool event_driven_;
  double steps_per_year_;
};

// Unobservable log-barrier; log_level < 0 a.s. and P(D <= x) = e^x, x < 0.
struct Barrier {
  double log_level = 0.0;
};

// Simulates X over [0, horizon]. Event-driven: exact piecewise-linear path
// from two Poisson clocks with exponential jump sizes. Grid: per-step
// increments c*dt - dS + dS' with subordinator increments sampled exactly;
// the running minimum is over grid points only (within-cell minima are
// missed, an O(dt) bias documented by the oracle module).
Path simulate_path(const LevyModel& model, double horizon,
                   const SimScheme& scheme, RngStream& rng);

// Running minimum X_min(horizon) alone, consuming the stream exactly like
// simulate_path does; used by the sampling loops to avoid path storage.
double simulate_running_min(const LevyModel& model, double horizon,
                            const SimScheme& scheme, RngStream& rng);

// D = ln U with U uniform on (0, 1); -D is standard exponential.
Barrier sample_barrier(RngStream& rng);

// First time X_t <= D. Event-driven paths cross exactly (mid-segment drift
// crossings are solved in closed form); grid paths report the first grid
// point at or below the barrier, which is right-biased. Empty if the path
// never crosses within its horizon.
std::optional<double> default_time(const Path& path, const Barrier& barrier);

}  // namespace levycredit
