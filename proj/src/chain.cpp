#include "tensorwalk/chain.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

namespace {

void verify_stochastic(const Kernel& k) {
  const int n = k.size();
  for (int i = 0; i < n; ++i) {
    Rational sum(0);
    for (int j = 0; j < n; ++j) {
      if (k.rows(i, j) < 0 || k.rows(i, j) > 1)
        throw consistency_error("kernel entry outside [0,1]");
      sum += k.rows(i, j);
    }
    if (sum != 1) throw consistency_error("row " + std::to_string(i) + " does not sum to 1");
  }
}

void verify_stationary(const Kernel& k) {
  const int n = k.size();
  for (int j = 0; j < n; ++j) {
    Rational acc(0);
    for (int i = 0; i < n; ++i)
      if (k.rows(i, j) != 0) acc += k.pi[i] * k.rows(i, j);
    if (acc != k.pi[j])
      throw consistency_error("stationary vector is not an exact left fixed vector (state " +
                              std::to_string(j) + ")");
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Kernel build_kernel(const ChainSpec& spec) {
  Kernel k;
  k.state_labels = spec.states;
  k.dims = spec.dims;
  const int n = spec.size();
  k.rows = RatMatrix(n, n);
  Rational weight_total(0);
  for (const auto& comp : spec.components) {
    weight_total += comp.weight;
    for (int s = 0; s < n; ++s)
      for (auto& [t, mult] : comp.decomp[s])
        k.rows(s, t) += comp.weight * rat(mult * spec.dims[t], comp.alpha_dim * spec.dims[s]);
  }
  if (weight_total != 1) throw consistency_error("component weights do not sum to 1");
  verify_stochastic(k);
  k.pi = stationary(spec);
  verify_stationary(k);
  return k;
}

Kernel lazy(const Kernel& k, const Rational& hold) {
  if (hold < 0 || hold > 1) throw parameter_error("lazy hold must lie in [0,1]");
  Kernel out = k;
  const Rational move = Rational(1) - hold;
  const int n = k.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.rows(i, j) = move * k.rows(i, j);
      if (i == j) out.rows(i, j) += hold;
    }
  verify_stochastic(out);
  verify_stationary(out);
  return out;
}

Kernel mix(const std::vector<std::pair<Kernel, Rational>>& parts) {
  if (parts.empty()) throw parameter_error("mix of zero kernels");
  const Kernel& first = parts.front().first;
  Rational total(0);
  for (auto& [kern, w] : parts) {
    if (w < 0) throw parameter_error("mixture weights must be nonnegative");
    if (kern.state_labels != first.state_labels || kern.dims != first.dims)
      throw parameter_error("mixture of kernels on different state spaces");
    total += w;
  }
  if (total != 1) throw parameter_error("mixture weights must sum to 1");
  Kernel out;
  out.state_labels = first.state_labels;
  out.dims = first.dims;
  out.pi = first.pi;
  const int n = first.size();
  out.rows = RatMatrix(n, n);
  for (auto& [kern, w] : parts)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (kern.rows(i, j) != 0) out.rows(i, j) += w * kern.rows(i, j);
  verify_stochastic(out);
  verify_stationary(out);
  return out;
}

std::vector<Rational> power_row_exact(const Kernel& k, int start, long steps,
                                      const PowerBudget& budget) {
  const int n = k.size();
  if (start < 0 || start >= n) throw lookup_error("start state out of range");
  if (steps < 0) throw parameter_error("negative step count");
  if (n > budget.max_states || steps > budget.max_steps)
    throw budget_error("exact power of " + std::to_string(n) + " states over " +
                       std::to_string(steps) + " steps exceeds the configured budget");

  // K = (1/q) D^-1 N D with N integer: N_ij = q * K_ij * d_i / d_j. The
  // row of K^steps is recovered from an integer iteration against N.
  BigInt q(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (k.rows(i, j) != 0) {
        Rational scaled = k.rows(i, j) * rat(k.dims[i], k.dims[j]);
        mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), scaled.get_den_mpz_t());
      }
  std::vector<std::vector<std::pair<int, BigInt>>> nrows(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (k.rows(i, j) != 0) {
        Rational scaled = k.rows(i, j) * rat(k.dims[i], k.dims[j]) * Rational(q);
        scaled.canonicalize();
        if (scaled.get_den() != 1) throw consistency_error("kernel scaling is not integral");
        nrows[i].emplace_back(j, BigInt(scaled.get_num()));
      }

  std::vector<BigInt> u(n), next(n);
  u[start] = 1;
  for (long step = 0; step < steps; ++step) {
    for (auto& v : next) v = 0;
    for (int i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (auto& [j, nij] : nrows[i]) next[j] += u[i] * nij;
    }
    std::swap(u, next);
  }

  BigInt qpow;
  mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(steps));
  std::vector<Rational> row(n);
  for (int j = 0; j < n; ++j) {
    row[j] = Rational(u[j] * k.dims[j], qpow * k.dims[start]);
    row[j].canonicalize();
  }
  return row;
}

std::vector<double> power_row(const Kernel& k, int start, long steps) {
  const int n = k.size();
  if (start < 0 || start >= n) throw lookup_error("start state out of range");
  if (steps < 0) throw parameter_error("negative step count");
  Eigen::MatrixXd kd = to_double_matrix(k.rows);
  Eigen::RowVectorXd v = Eigen::RowVectorXd::Zero(n);
  v(start) = 1.0;
  // Short horizons by row iteration, long ones by repeated squaring.
  if (steps <= 8192 && steps <= 32L * n) {
    for (long step = 0; step < steps; ++step) v = v * kd;
  } else {
    long e = steps;
    while (e > 0) {
      if (e & 1) v = v * kd;
      e >>= 1;
      if (e > 0) kd = kd * kd;
    }
  }
  return {v.data(), v.data() + n};
}

double tv_distance(const std::vector<double>& d1, const std::vector<double>& d2) {
  if (d1.size() != d2.size()) throw parameter_error("tv of distributions of different length");
  double acc = 0.0;
  for (std::size_t i = 0; i < d1.size(); ++i) acc += std::abs(d1[i] - d2[i]);
  return acc / 2.0;
}

Rational tv_distance_exact(const std::vector<Rational>& d1, const std::vector<Rational>& d2) {
  if (d1.size() != d2.size()) throw parameter_error("tv of distributions of different length");
  Rational acc(0);
  for (std::size_t i = 0; i < d1.size(); ++i) acc += abs(d1[i] - d2[i]);
  acc /= 2;
  acc.canonicalize();
  return acc;
}

double linf_distance(const std::vector<double>& row, const std::vector<double>& pi) {
  if (row.size() != pi.size()) throw parameter_error("linf of distributions of different length");
  double worst = 0.0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!(pi[i] > 0.0)) throw parameter_error("linf distance requires strictly positive pi");
    worst = std::max(worst, std::abs(row[i] / pi[i] - 1.0));
  }
  return worst;
}

DistanceSeries distance_series(const Kernel& k, int start, long lmax) {
  const int n = k.size();
  if (start < 0 || start >= n) throw lookup_error("start state out of range");
  Eigen::MatrixXd kd = to_double_matrix(k.rows);
  std::vector<double> pi = to_double_vector(k.pi);
  Eigen::RowVectorXd v = Eigen::RowVectorXd::Zero(n);
  v(start) = 1.0;
  DistanceSeries series;
  series.entries.reserve(lmax + 1);
  double prev_linf = 0.0;
  for (long step = 0; step <= lmax; ++step) {
    std::vector<double> row(v.data(), v.data() + n);
    DistanceEntry e;
    e.step = step;
    e.tv = tv_distance(row, pi);
    e.linf = linf_distance(row, pi);
    if (step > 0 && e.linf > prev_linf + 1e-12)
      throw consistency_error("linf distance increased at step " + std::to_string(step));
    prev_linf = e.linf;
    series.entries.push_back(e);
    if (step < lmax) v = v * kd;
  }
  return series;
}

std::string distance_csv(const DistanceSeries& s) {
  std::string out = "step,tv,linf\n";
  for (const auto& e : s.entries)
    out += std::to_string(e.step) + "," + fmt17(e.tv) + "," + fmt17(e.linf) + "\n";
  return out;
}

std::string kernel_to_json(const Kernel& k) {
  nlohmann::json j;
  j["states"] = k.state_labels;
  j["dims"] = k.dims;
  std::vector<std::string> pi;
  for (const auto& v : k.pi) pi.push_back(rat_str(v));
  j["stationary"] = pi;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < k.size(); ++i) {
    std::vector<std::string> row;
    for (int c = 0; c < k.size(); ++c) row.push_back(rat_str(k.rows(i, c)));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(2);
}

}  // namespace tensorwalk
