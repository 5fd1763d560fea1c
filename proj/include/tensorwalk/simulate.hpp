#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tensorwalk/chain.hpp"

namespace tensorwalk {

struct SimConfig {
  std::uint64_t seed = 0;
  long num_samples = 1;
  int start = 0;
  long steps = 0;
};

// Counter-based substreams: sample i draws from a SplitMix64 generator
// seeded with mix(seed, i), so results are independent of threading and
// evaluation order. Each transition consumes one uniform in [0,1) and
// inverts the cumulative row (rationals converted once to doubles).
int sample_path(const Kernel& k, const SimConfig& cfg, std::vector<int>* trajectory = nullptr);

std::vector<long> empirical_counts(const Kernel& k, const SimConfig& cfg);
std::vector<double> empirical_row(const Kernel& k, const SimConfig& cfg);

// CSV with header "state,count,freq".
std::string empirical_csv(const Kernel& k, const std::vector<long>& counts);

}  // namespace tensorwalk
