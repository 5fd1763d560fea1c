#include "tensorwalk/simulate.hpp"

#include <algorithm>
#include <cstdio>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Substream derivation: sample i runs SplitMix64 from
// mix(seed ^ (i+1)*GOLDEN), independent of evaluation order.
SplitMix64 substream(std::uint64_t seed, long i) {
  SplitMix64 g{seed ^ (static_cast<std::uint64_t>(i) + 1) * 0x9E3779B97F4A7C15ull};
  g.state = g.next();
  return g;
}

std::vector<std::vector<double>> cumulative_rows(const Kernel& k) {
  const int n = k.size();
  std::vector<std::vector<double>> cdf(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += rat_d(k.rows(i, j));
      cdf[i][j] = acc;
    }
    cdf[i][n - 1] = 1.0;
  }
  return cdf;
}

int draw(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) return static_cast<int>(cdf.size()) - 1;
  return static_cast<int>(it - cdf.begin());
}

int run_one(const std::vector<std::vector<double>>& cdf, SplitMix64 g, int start, long steps,
            std::vector<int>* trajectory) {
  int state = start;
  if (trajectory) trajectory->push_back(state);
  for (long t = 0; t < steps; ++t) {
    state = draw(cdf[state], g.uniform());
    if (trajectory) trajectory->push_back(state);
  }
  return state;
}

}  // namespace

int sample_path(const Kernel& k, const SimConfig& cfg, std::vector<int>* trajectory) {
  if (cfg.start < 0 || cfg.start >= k.size()) throw lookup_error("start state out of range");
  auto cdf = cumulative_rows(k);
  return run_one(cdf, substream(cfg.seed, 0), cfg.start, cfg.steps, trajectory);
}

std::vector<long> empirical_counts(const Kernel& k, const SimConfig& cfg) {
  if (cfg.start < 0 || cfg.start >= k.size()) throw lookup_error("start state out of range");
  if (cfg.num_samples < 1) throw parameter_error("num_samples must be >= 1");
  auto cdf = cumulative_rows(k);
  std::vector<long> counts(k.size(), 0);
  for (long i = 0; i < cfg.num_samples; ++i)
    ++counts[run_one(cdf, substream(cfg.seed, i), cfg.start, cfg.steps, nullptr)];
  return counts;
}

std::vector<double> empirical_row(const Kernel& k, const SimConfig& cfg) {
  auto counts = empirical_counts(k, cfg);
  std::vector<double> freq(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    freq[i] = static_cast<double>(counts[i]) / static_cast<double>(cfg.num_samples);
  return freq;
}

std::string empirical_csv(const Kernel& k, const std::vector<long>& counts) {
  long total = 0;
  for (long c : counts) total += c;
  std::string out = "state,count,freq\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", static_cast<double>(counts[i]) / total);
    out += k.state_labels[i] + "," + std::to_string(counts[i]) + "," + buf + "\n";
  }
  return out;
}

}  // namespace tensorwalk
