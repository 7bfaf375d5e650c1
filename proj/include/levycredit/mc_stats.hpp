#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "levycredit/rng.hpp"

namespace levycredit {

// Provenance of a deterministic run: every sample i draws from the path
// stream (base_seed, run_index * 2^32 + i); barrier draws for the same
// sample use the matching index in the top-bit region, so path and barrier
// streams never collide.
inline constexpr std::uint64_t kSamplesPerRun = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kBarrierStreamOffset = std::uint64_t{1} << 62;

struct RunSeed {
  std::uint64_t base_seed = 0;
  std::uint64_t run_index = 0;

  RngStream path_stream(std::uint64_t sample) const {
    return {base_seed, run_index * kSamplesPerRun + sample};
  }
  RngStream barrier_stream(std::uint64_t sample) const {
    return {base_seed,
            run_index * kSamplesPerRun + sample + kBarrierStreamOffset};
  }
};

// Monte Carlo point estimate; std_error is the sample standard deviation
// (n-1 denominator) divided by sqrt(n).
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  RunSeed seed;
};

// Order-independent pairwise summation; the reduction tree depends only on
// the element count, so totals are bitwise reproducible for any worker
// count that filled the buffer.
double pairwise_sum(std::span<const double> values);

McEstimate summarize(std::span<const double> samples, const RunSeed& seed);

// Worker count resolution: `requested` if positive, otherwise the hardware
// count; either is capped by the LEVY_DEFAULT_THREADS environment variable.
unsigned resolve_thread_count(unsigned requested);

// Runs body(begin, end) over a static partition of [0, n) on `n_threads`
// workers (block 0 runs on the calling thread). Bodies must only touch
// disjoint per-index state; the partition never affects stored results.
void parallel_for(std::size_t n, unsigned n_threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace levycredit
