#include <doctest.h>

#include <cmath>

#include "tensorwalk/chain.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/family.hpp"
#include "tensorwalk/simulate.hpp"

using namespace tensorwalk;

TEST_CASE("zero steps stays put; deterministic first step") {
  Kernel k = build_kernel(make_spec({Family::SL2p, 5}, "natural"));
  SimConfig cfg{42, 1, 0, 0};
  CHECK(sample_path(k, cfg) == 0);
  cfg.steps = 1;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    cfg.seed = seed;
    CHECK(sample_path(k, cfg) == 1);  // state 0 moves to 1 with probability 1
  }
  std::vector<int> trajectory;
  cfg.steps = 6;
  sample_path(k, cfg, &trajectory);
  CHECK(trajectory.size() == 7);
  CHECK(trajectory[0] == 0);
  CHECK(trajectory[1] == 1);
}

TEST_CASE("reproducibility: identical config gives identical bytes") {
  Kernel k = lazy(build_kernel(make_spec({Family::SL2p, 11}, "natural")), rat(1, 2));
  SimConfig cfg{123456789ull, 20000, 0, 25};
  auto c1 = empirical_counts(k, cfg);
  auto c2 = empirical_counts(k, cfg);
  CHECK(c1 == c2);
  CHECK(empirical_csv(k, c1) == empirical_csv(k, c2));
  cfg.seed += 1;
  CHECK(empirical_counts(k, cfg) != c1);
}

TEST_CASE("single sample is a point mass") {
  Kernel k = build_kernel(make_spec({Family::QuantumSL2, 5}, "v1"));
  SimConfig cfg{7, 1, 0, 3};
  auto freq = empirical_row(k, cfg);
  double total = 0;
  int nonzero = 0;
  for (double f : freq) {
    total += f;
    if (f > 0) ++nonzero;
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK(nonzero == 1);
}

TEST_CASE("one-step frequencies match the row within 3 sigma") {
  Kernel k = build_kernel(make_spec({Family::QuantumSL2, 9}, "v1"));
  SimConfig cfg{2024, 1000000, 8, 1};
  auto freq = empirical_row(k, cfg);
  const double p0 = 1.0 / 9, p7 = 8.0 / 9;
  const double s0 = std::sqrt(p0 * (1 - p0) / cfg.num_samples);
  CHECK(std::abs(freq[0] - p0) < 3 * s0);
  CHECK(std::abs(freq[7] - p7) < 3 * s0);
  for (int y : {1, 2, 3, 4, 5, 6, 8}) CHECK(freq[y] == 0.0);
}

TEST_CASE("empirical rows track exact rows in tv") {
  Kernel k = lazy(build_kernel(make_spec({Family::SL2p, 11}, "natural")), rat(1, 2));
  SimConfig cfg{5150, 100000, 0, 50};
  auto freq = empirical_row(k, cfg);
  auto exact = power_row(k, 0, 50);
  CHECK(tv_distance(freq, exact) < 0.02);
}

TEST_CASE("stationary sampling stays near pi") {
  // draw starts from pi (one inverse-cdf draw per sample via a one-step
  // chain whose every row is pi)
  Kernel k = build_kernel(make_spec({Family::QuantumSL2, 9}, "v1"));
  Kernel pi_sampler = k;
  for (int i = 0; i < k.size(); ++i)
    for (int j = 0; j < k.size(); ++j) pi_sampler.rows(i, j) = k.pi[j];
  SimConfig cfg{99, 100000, 0, 1};
  auto freq = empirical_row(pi_sampler, cfg);
  CHECK(tv_distance(freq, to_double_vector(k.pi)) < 0.02);
}

TEST_CASE("csv format") {
  Kernel k = build_kernel(make_spec({Family::QuantumSL2, 3}, "v1"));
  SimConfig cfg{1, 100, 0, 2};
  std::string csv = empirical_csv(k, empirical_counts(k, cfg));
  CHECK(csv.substr(0, 17) == "state,count,freq\n");
  const bool has_state0 = csv.find("\n0,") != std::string::npos || csv.substr(17, 2) == "0,";
  CHECK(has_state0);
}

TEST_CASE("config validation") {
  Kernel k = build_kernel(make_spec({Family::QuantumSL2, 3}, "v1"));
  SimConfig cfg{1, 0, 0, 1};
  CHECK_THROWS_AS(empirical_counts(k, cfg), parameter_error);
  cfg.num_samples = 1;
  cfg.start = 5;
  CHECK_THROWS_AS(empirical_counts(k, cfg), lookup_error);
}
