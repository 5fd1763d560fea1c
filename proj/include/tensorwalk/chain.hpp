#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tensorwalk/family.hpp"
#include "tensorwalk/matrix.hpp"
#include "tensorwalk/rational.hpp"

namespace tensorwalk {

// Row-stochastic transition matrix over exact rationals together with its
// exact stationary distribution (verified at construction).
struct Kernel {
  std::vector<std::string> state_labels;
  std::vector<long> dims;
  RatMatrix rows;
  std::vector<Rational> pi;

  int size() const { return rows.rows(); }
};

// K[s][t] = mult(t in decomp(s)) * dim(t) / (alpha_dim * dim(s)), summed
// over weighted mixture components. Verifies row sums and stationarity
// exactly; throws consistency_error if either fails.
Kernel build_kernel(const ChainSpec& spec);

// hold*I + (1-hold)*K. Throws parameter_error for hold outside [0,1].
Kernel lazy(const Kernel& k, const Rational& hold);

// Weighted sum of kernels on the same state space. Weights must be
// nonnegative and sum to one; stationarity is re-verified exactly.
Kernel mix(const std::vector<std::pair<Kernel, Rational>>& parts);

struct PowerBudget {
  int max_states = 512;
  long max_steps = 4096;
};

// Row of K^steps from `start`, in exact rational arithmetic. Refuses runs
// beyond the budget with budget_error.
std::vector<Rational> power_row_exact(const Kernel& k, int start, long steps,
                                      const PowerBudget& budget = {});

// Same row in doubles; uses iterated row-vector products for short
// horizons and repeated squaring for long ones.
std::vector<double> power_row(const Kernel& k, int start, long steps);

double tv_distance(const std::vector<double>& d1, const std::vector<double>& d2);
Rational tv_distance_exact(const std::vector<Rational>& d1, const std::vector<Rational>& d2);

// max_y |row(y)/pi(y) - 1|; requires pi strictly positive.
double linf_distance(const std::vector<double>& row, const std::vector<double>& pi);

struct DistanceEntry {
  long step = 0;
  double tv = 0.0;
  double linf = 0.0;
};

struct DistanceSeries {
  std::vector<DistanceEntry> entries;
};

// tv and linf against pi for steps 0..lmax (float row iteration). Checks
// that the linf column is monotone non-increasing within 1e-12 slack and
// throws consistency_error otherwise.
DistanceSeries distance_series(const Kernel& k, int start, long lmax);

// CSV with header "step,tv,linf", doubles at 17 significant digits.
std::string distance_csv(const DistanceSeries& s);

// JSON kernel dump; rationals as "num/den" strings.
std::string kernel_to_json(const Kernel& k);

}  // namespace tensorwalk
