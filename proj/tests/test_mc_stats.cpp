#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "levycredit/mc_stats.hpp"

using namespace levycredit;

TEST_CASE("pairwise_sum matches a long-double reference") {
  std::vector<double> xs(100001);
  RngStream rng(5, 0);
  long double reference = 0.0L;
  for (auto& x : xs) {
    x = rng.next_uniform() - 0.5;
    reference += x;
  }
  const double sum = pairwise_sum(xs);
  CHECK(std::abs(sum - static_cast<double>(reference)) < 1e-9);
  CHECK(pairwise_sum(xs) == sum);  // deterministic
}

TEST_CASE("summarize on a tiny hand-checked sample") {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const McEstimate e = summarize(xs, {11, 3});
  CHECK(e.mean == doctest::Approx(2.5));
  CHECK(e.std_error ==
        doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0).epsilon(1e-14));
  CHECK(e.n_samples == 4);
  CHECK(e.seed.base_seed == 11);
  CHECK(e.seed.run_index == 3);

  CHECK_THROWS_AS(summarize(std::vector<double>{1.0}, {0, 0}), ParameterError);
}

TEST_CASE("parallel_for fills identically for any worker count") {
  const std::size_t n = 10007;
  std::vector<double> one(n), two(n), eight(n);
  const auto fill = [](std::vector<double>& out) {
    return [&out](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        RngStream rng(77, i);
        out[i] = rng.next_normal();
      }
    };
  };
  parallel_for(n, 1, fill(one));
  parallel_for(n, 2, fill(two));
  parallel_for(n, 8, fill(eight));
  CHECK(one == two);
  CHECK(one == eight);
}

TEST_CASE("parallel_for propagates worker exceptions") {
  CHECK_THROWS_AS(
      parallel_for(100, 4,
                   [](std::size_t begin, std::size_t) {
                     if (begin > 0) throw std::runtime_error("worker failure");
                   }),
      std::runtime_error);
}

TEST_CASE("LEVY_DEFAULT_THREADS caps the worker count") {
  setenv("LEVY_DEFAULT_THREADS", "1", 1);
  CHECK(resolve_thread_count(8) == 1);
  CHECK(resolve_thread_count(0) == 1);
  unsetenv("LEVY_DEFAULT_THREADS");
  CHECK(resolve_thread_count(3) == 3);
}

TEST_CASE("run seed stream layout separates paths from barriers") {
  const RunSeed seed{123, 2};
  CHECK(seed.path_stream(5).stream_index() == 2 * kSamplesPerRun + 5);
  CHECK(seed.barrier_stream(5).stream_index() ==
        2 * kSamplesPerRun + 5 + kBarrierStreamOffset);
  CHECK(seed.path_stream(5).base_seed() == 123);
}
