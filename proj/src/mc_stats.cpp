#include "levycredit/mc_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "levycredit/errors.hpp"

namespace levycredit {

namespace {

double pairwise_block(const double* data, std::size_t n) {
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_block(data, half) + pairwise_block(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_block(values.data(), values.size());
}

McEstimate summarize(std::span<const double> samples, const RunSeed& seed) {
  const std::size_t n = samples.size();
  if (n < 2) throw ParameterError("summarize: need at least 2 samples");
  const double mean = pairwise_sum(samples) / static_cast<double>(n);

  // Pairwise over squared deviations, blockwise to avoid a second buffer.
  std::vector<double> block_sums;
  block_sums.reserve(n / 1024 + 1);
  for (std::size_t begin = 0; begin < n; begin += 1024) {
    const std::size_t end = std::min(begin + 1024, n);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double d = samples[i] - mean;
      s += d * d;
    }
    block_sums.push_back(s);
  }
  const double ss = pairwise_sum(block_sums);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return {mean, sd / std::sqrt(static_cast<double>(n)), n, seed};
}

unsigned resolve_thread_count(unsigned requested) {
  unsigned n = requested > 0 ? requested : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("LEVY_DEFAULT_THREADS")) {
    const long parsed = std::strtol(cap, nullptr, 10);
    if (parsed > 0 && static_cast<unsigned>(parsed) < n)
      n = static_cast<unsigned>(parsed);
  }
  return n;
}

void parallel_for(std::size_t n, unsigned n_threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  n_threads = std::max(1u, n_threads);
  if (static_cast<std::size_t>(n_threads) > n)
    n_threads = static_cast<unsigned>(n);
  if (n_threads == 1) {
    body(0, n);
    return;
  }

  const std::size_t chunk = n / n_threads;
  const std::size_t remainder = n % n_threads;
  std::vector<std::thread> workers;
  workers.reserve(n_threads - 1);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  std::size_t begin = chunk + (remainder > 0 ? 1 : 0);  // block 0, run inline
  for (unsigned w = 1; w < n_threads; ++w) {
    const std::size_t len = chunk + (w < remainder ? 1 : 0);
    const std::size_t end = begin + len;
    workers.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
    begin = end;
  }
  try {
    body(0, chunk + (remainder > 0 ? 1 : 0));
  } catch (...) {
    std::lock_guard<std::mutex> lock(error_mutex);
    if (!first_error) first_error = std::current_exception();
  }
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace levycredit
