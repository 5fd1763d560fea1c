#include "tensorwalk/quantum.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "tensorwalk/chain.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/family.hpp"

namespace tensorwalk {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_n(int n) {
  if (n < 3 || n % 2 == 0)
    throw parameter_error("quantum family requires odd n >= 3, got " + std::to_string(n));
}

double powi(double base, long e) {
  double acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

std::vector<double> quantum_pi(int n) {
  std::vector<double> pi(n);
  for (int j = 0; j <= n - 2; ++j) pi[j] = 2.0 * (j + 1) / (static_cast<double>(n) * n);
  pi[n - 1] = 1.0 / n;
  return pi;
}

}  // namespace

JordanSpectralData jordan_data(int n) {
  validate_n(n);
  JordanSpectralData jd;
  jd.n = n;
  jd.m = (n - 1) / 2;
  jd.lambdas.resize(jd.m);
  jd.R.setZero(n, jd.m);
  jd.Rp.setZero(n, jd.m);
  jd.L.setZero(jd.m, n);
  jd.Lp.setZero(jd.m, n);
  jd.d.resize(jd.m);
  jd.dp.resize(jd.m);

  for (int j = 1; j <= jd.m; ++j) {
    const int col = j - 1;
    const double theta = 2.0 * kPi * j / n;
    jd.lambdas[col] = std::cos(theta);

    for (int a = 0; a <= n - 2; ++a) {
      jd.R(a, col) = std::sin((a + 1) * theta) / (a + 1);
      jd.L(col, a) = (a + 1) * std::cos((a + 1) * theta);
    }
    jd.R(n - 1, col) = 0.0;
    jd.L(col, n - 1) = n / 2.0;

    // Generalized right vector: coordinate a is sum_k k*eta_k over
    // k = a, a-2, ..., scaled by 1/(i*(a+1)) with eta_k = 2i sin(k*theta).
    for (int a = 0; a <= n - 1; ++a) {
      double acc = 0.0;
      for (int k = a; k >= 1; k -= 2) acc += 2.0 * k * std::sin(k * theta);
      jd.Rp(a, col) = acc / (a + 1);
    }

    // Generalized left vector via delta_b = gamma_{b-1} + gamma_{b-3} + ...
    // with gamma_0 = 1, gamma_t = 2 cos(t*theta), scaled by D = diag(1..n).
    auto delta = [&](int b) {
      double acc = 0.0;
      for (int t = b - 1; t >= 0; t -= 2) acc += t == 0 ? 1.0 : 2.0 * std::cos(t * theta);
      return acc;
    };
    for (int a = 0; a <= n - 1; ++a) {
      double y;
      if (a <= jd.m - 1)
        y = (a + 1 - n) * delta(a + 1);
      else
        y = (n - 1 - a) * delta(n - 1 - a);
      jd.Lp(col, a) = (a + 1) * y;
    }

    const double d_right = jd.L.row(col).dot(jd.Rp.col(col));
    const double d_left = jd.Lp.row(col).dot(jd.R.col(col));
    if (std::abs(d_right - d_left) > 1e-10)
      throw consistency_error("pairing mismatch L.Rp vs Lp.R at j=" + std::to_string(j));
    jd.d[col] = d_left;
    jd.dp[col] = jd.Lp.row(col).dot(jd.Rp.col(col));
  }
  return jd;
}

double dj_closed(int n, int j) {
  const double theta = 2.0 * kPi * j / n;
  const double s = std::sin(theta);
  return n / 32.0 * (4.0 / s - (n + 1.0) / (s * s * s));
}

double dj_direct(int n, int j) {
  JordanSpectralData jd = jordan_data(n);
  if (j < 1 || j > jd.m) throw lookup_error("j out of range");
  return jd.d[j - 1];
}

double djprime_direct(int n, int j) {
  JordanSpectralData jd = jordan_data(n);
  if (j < 1 || j > jd.m) throw lookup_error("j out of range");
  return jd.dp[j - 1];
}

std::vector<double> jordan_power_row(int n, long steps) {
  validate_n(n);
  if (steps < 0) throw parameter_error("negative step count");
  JordanSpectralData jd = jordan_data(n);
  std::vector<double> row = quantum_pi(n);
  const int x = 0;
  for (int col = 0; col < jd.m; ++col) {
    const double lam = jd.lambdas[col];
    const double lpow = powi(lam, steps);
    const double r0 = jd.R(x, col);
    const double rp0 = jd.Rp(x, col);
    const double aprime = lpow * r0 / jd.d[col];
    const double a = lpow / jd.d[col] *
                     (rp0 + static_cast<double>(steps) * r0 / lam - r0 * jd.dp[col] / jd.d[col]);
    for (int y = 0; y < n; ++y) row[y] += a * jd.L(col, y) + aprime * jd.Lp(col, y);
  }
  return row;
}

std::vector<QuantumPairingRow> quantum_pairing_report(int n) {
  JordanSpectralData jd = jordan_data(n);
  Kernel k = build_kernel(make_spec({Family::QuantumSL2, n}, "v1"));
  Eigen::MatrixXd kd = to_double_matrix(k.rows);
  std::vector<QuantumPairingRow> rows;
  for (int col = 0; col < jd.m; ++col) {
    QuantumPairingRow r;
    r.j = col + 1;
    r.lambda = jd.lambdas[col];
    r.d_direct = jd.d[col];
    r.d_closed = dj_closed(n, r.j);
    r.d_ratio = r.d_direct / r.d_closed;
    r.dprime = jd.dp[col];
    const double res_r =
        (kd * jd.R.col(col) - r.lambda * jd.R.col(col)).cwiseAbs().maxCoeff();
    const double res_rp =
        (kd * jd.Rp.col(col) - r.lambda * jd.Rp.col(col) - jd.R.col(col)).cwiseAbs().maxCoeff();
    const double res_l =
        (jd.L.row(col) * kd - r.lambda * jd.L.row(col)).cwiseAbs().maxCoeff();
    const double res_lp =
        (jd.Lp.row(col) * kd - r.lambda * jd.Lp.row(col) - jd.L.row(col)).cwiseAbs().maxCoeff();
    r.residual_max = std::max({res_r, res_rp, res_l, res_lp});
    rows.push_back(r);
  }
  return rows;
}

std::string quantum_spectrum_to_json(int n) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : quantum_pairing_report(n))
    arr.push_back({{"j", r.j},
                   {"lambda", r.lambda},
                   {"d_direct", r.d_direct},
                   {"d_closed", r.d_closed},
                   {"d_ratio", r.d_ratio},
                   {"dprime", r.dprime},
                   {"residual_max", r.residual_max}});
  return arr.dump(2);
}

namespace {

// Characteristic polynomial coefficients (monic, descending powers) of an
// integer matrix, exact, via the Faddeev-LeVerrier recursion.
std::vector<Rational> char_poly(const std::vector<std::vector<long>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n)), mk = a, tmp = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
  // mk = A, c1 = -tr(A); mk_{k} = A (mk_{k-1} + c_{k-1} I), c_k = -tr/k
  std::vector<Rational> coeff(n + 1);
  coeff[0] = 1;
  mk = a;
  for (int k = 1; k <= n; ++k) {
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += mk[i][i];
    coeff[k] = -tr / k;
    coeff[k].canonicalize();
    if (k == n) break;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = mk[i][j];
        if (i == j) s += coeff[k];
        tmp[i][j] = s;
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s(0);
        for (int l = 0; l < n; ++l)
          if (a[i][l] != 0 && tmp[l][j] != 0) s += a[i][l] * tmp[l][j];
        mk[i][j] = s;
      }
  }
  return coeff;
}

std::vector<long> mat_vec(const std::vector<std::vector<long>>& m, const std::vector<long>& v) {
  const int n = static_cast<int>(m.size());
  std::vector<long> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::vector<long> vec_mat(const std::vector<long>& v, const std::vector<std::vector<long>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<long> out(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[j] += v[i] * m[i][j];
  return out;
}

std::vector<long> scaled(const std::vector<long>& v, long c) {
  std::vector<long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

}  // namespace

SteinbergSpectrumReport steinberg_spectrum(int n) {
  validate_n(n);
  SteinbergSpectrumReport rep;
  rep.n = n;
  ChainSpec spec = make_spec({Family::QuantumSL2, n}, "steinberg");
  auto m = mckay_matrix(spec);
  const int mm = (n - 1) / 2;

  std::vector<long> r0(n);
  for (int i = 0; i < n; ++i) r0[i] = i + 1;
  rep.perron_right = mat_vec(m, r0) == scaled(r0, n);

  std::vector<long> l0(n, 2);
  l0[n - 1] = 1;
  rep.perron_left = vec_mat(l0, m) == scaled(l0, n);

  rep.kernel_vectors = true;
  rep.jordan_right = true;
  rep.jordan_left = true;
  const std::vector<long> zero(n, 0);
  for (int j = 1; j <= mm; ++j) {
    std::vector<long> r(n, 0);
    r[j - 1] = 1;
    r[n - 1 - j] = -1;
    if (mat_vec(m, r) != zero) rep.kernel_vectors = false;

    std::vector<long> l(n, 0);
    l[j - 1] = 1;
    l[n - 1 - j] = 1;
    l[n - 1] = -1;
    if (vec_mat(l, m) != zero) rep.kernel_vectors = false;

    std::vector<long> rp(n, 0);
    long factor = 2;
    if (n == 3) {
      rp = {-1, -1, 4};
      factor = 4;
    } else if (j == 1) {
      rp[n - 3] = -1;
      rp[n - 1] = 2;
    } else {
      rp[n - j - 2] = -1;
      rp[n - j] = 1;
    }
    if (mat_vec(m, rp) != scaled(r, factor)) rep.jordan_right = false;

    std::vector<long> lp(n, 0);
    lp[0] -= 2;
    if (j >= 2) lp[j - 2] -= 1;
    lp[j] += 1;
    if (vec_mat(lp, m) != scaled(l, 2)) rep.jordan_left = false;
  }

  auto coeff = char_poly(m);
  rep.char_poly = coeff[0] == 1 && coeff[1] == -n;
  for (int k = 2; k <= n; ++k)
    if (coeff[k] != 0) rep.char_poly = false;

  Kernel k = build_kernel(spec);
  rep.stationary_match = true;
  for (int j = 0; j <= n - 2; ++j)
    if (k.pi[j] != rat(2 * (j + 1), static_cast<long>(n) * n)) rep.stationary_match = false;
  if (k.pi[n - 1] != rat(1, n)) rep.stationary_match = false;
  return rep;
}

}  // namespace tensorwalk
