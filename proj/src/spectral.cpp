#include "tensorwalk/spectral.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> cpow(std::complex<double> base, long e) {
  std::complex<double> acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

}  // namespace

SpectralData brauer_spectrum(const ChainSpec& spec) {
  CharacterData cd = character_data(spec);
  const int n = spec.size();
  SpectralData sd;
  sd.class_ids = cd.class_ids;
  sd.eigenvalues.setZero(n);
  for (const auto& comp : spec.components) {
    const double w = rat_d(comp.weight);
    for (int c = 0; c < n; ++c)
      sd.eigenvalues(c) += w * comp.alpha_values[c] / static_cast<double>(comp.alpha_dim);
  }
  sd.right_vectors.setZero(n, n);
  sd.left_vectors.setZero(n, n);
  for (int chi = 0; chi < n; ++chi)
    for (int c = 0; c < n; ++c) {
      sd.right_vectors(chi, c) = cd.irr_values(chi, c) / static_cast<double>(spec.dims[chi]);
      sd.left_vectors(c, chi) = std::conj(cd.proj_values(chi, c)) *
                                static_cast<double>(spec.dims[chi]) /
                                static_cast<double>(cd.centralizer_orders[c]);
    }
  return sd;
}

SpectralData lazy_spectrum(SpectralData sd, const Rational& hold) {
  if (hold < 0 || hold > 1) throw parameter_error("lazy hold must lie in [0,1]");
  const double h = rat_d(hold);
  for (long c = 0; c < sd.eigenvalues.size(); ++c)
    sd.eigenvalues(c) = h + (1.0 - h) * sd.eigenvalues(c);
  return sd;
}

// K^steps(start, y) = sum_c beta_c^steps r_c(start) l_c(y). The pairing
// between left and right eigenvectors is bilinear: sum_chi l_c r_c' is the
// identity for every family, including those whose p-regular classes are
// not closed under inversion (complex eigenvalues).
std::vector<double> spectral_row(const SpectralData& sd, int start, long steps) {
  const long n = sd.eigenvalues.size();
  if (start < 0 || start >= n) throw lookup_error("start state out of range");
  Eigen::VectorXcd coeff(n);
  for (long c = 0; c < n; ++c)
    coeff(c) = cpow(sd.eigenvalues(c), steps) * sd.right_vectors(start, c);
  Eigen::RowVectorXcd row = coeff.transpose() * sd.left_vectors;
  std::vector<double> out(n);
  double imag_max = 0.0;
  for (long y = 0; y < n; ++y) {
    out[y] = row(y).real();
    imag_max = std::max(imag_max, std::abs(row(y).imag()));
  }
  if (imag_max > 1e-7)
    throw consistency_error("spectral row has imaginary residue " + std::to_string(imag_max));
  return out;
}

EigenResiduals eigen_residuals(const Kernel& k, const SpectralData& sd) {
  Eigen::MatrixXd kd = to_double_matrix(k.rows);
  Eigen::MatrixXcd kr = kd * sd.right_vectors;
  Eigen::MatrixXcd lk = sd.left_vectors * kd;
  EigenResiduals res;
  const long n = sd.eigenvalues.size();
  for (long c = 0; c < n; ++c) {
    const auto beta = sd.eigenvalues(c);
    res.right = std::max(res.right, (kr.col(c) - beta * sd.right_vectors.col(c))
                                        .cwiseAbs()
                                        .maxCoeff());
    res.left =
        std::max(res.left, (lk.row(c) - beta * sd.left_vectors.row(c)).cwiseAbs().maxCoeff());
  }
  return res;
}

double biorthogonality_residual(const SpectralData& sd) {
  Eigen::MatrixXcd b = sd.left_vectors * sd.right_vectors;
  const long n = b.rows();
  double worst = 0.0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(b(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

Rational mckay_conjugacy_residual(const Kernel& k, const std::vector<std::vector<long>>& mckay,
                                  long alpha_dim) {
  const int n = k.size();
  if (static_cast<int>(mckay.size()) != n) throw parameter_error("mckay matrix size mismatch");
  Rational worst(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational expect = rat(mckay[i][j] * k.dims[j], alpha_dim * k.dims[i]);
      Rational diff = abs(k.rows(i, j) - expect);
      if (diff > worst) worst = diff;
    }
  return worst;
}

Sl3BoundReport sl3_eigen_bound(int p) {
  ChainSpec spec = make_spec({Family::SL3p, p});
  const auto& alpha = spec.components.front().alpha_values;
  const double bound = 1.0 - 3.0 / (static_cast<double>(p) * p);
  Sl3BoundReport rep;
  rep.ok = true;
  rep.margin = 2.0;
  for (std::size_t c = 1; c < alpha.size(); ++c) {
    const double re = alpha[c].real() / 3.0;
    rep.margin = std::min(rep.margin, bound - re);
    if (re > bound) rep.ok = false;
  }
  // the cosine inequalities on the lattices the class angles live on
  for (long n : {static_cast<long>(p) - 1, static_cast<long>(p) * p - 1,
                 static_cast<long>(p) * p + p + 1})
    if (!cosine_lattice_bounds_hold(static_cast<int>(n))) rep.ok = false;
  return rep;
}

bool cosine_lattice_bounds_hold(int n) {
  const double n2 = static_cast<double>(n) * n;
  const double slack = 1e-12;
  std::vector<double> c(n);
  for (int j = 0; j < n; ++j) c[j] = std::cos(2.0 * kPi * j / n);
  for (int j = 1; j < n; ++j) {
    if (c[j] > 1.0 - kPi * kPi / n2 + slack) return false;
    if (std::abs(2.0 + c[j]) > 3.0 - kPi * kPi / n2 + slack) return false;
    if (std::abs(1.0 + 2.0 * c[j]) > 3.0 - 2.0 * kPi * kPi / n2 + slack) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int z = ((-x - y) % n + n) % n;
      if (x == 0 && y == 0 && z == 0) continue;
      if (std::abs(c[x] + c[y] + c[z]) > 3.0 - 2.0 * kPi * kPi / n2 + slack) return false;
    }
  return true;
}

std::string spectrum_to_json(const Kernel& k, const SpectralData& sd) {
  Eigen::MatrixXd kd = to_double_matrix(k.rows);
  Eigen::MatrixXcd kr = kd * sd.right_vectors;
  Eigen::MatrixXcd lk = sd.left_vectors * kd;
  nlohmann::json arr = nlohmann::json::array();
  for (long c = 0; c < sd.eigenvalues.size(); ++c) {
    const auto beta = sd.eigenvalues(c);
    const double rr = (kr.col(c) - beta * sd.right_vectors.col(c)).cwiseAbs().maxCoeff();
    const double rl = (lk.row(c) - beta * sd.left_vectors.row(c)).cwiseAbs().maxCoeff();
    arr.push_back({{"class_id", sd.class_ids[c]},
                   {"eigenvalue_re", beta.real()},
                   {"eigenvalue_im", beta.imag()},
                   {"residual_right", rr},
                   {"residual_left", rl}});
  }
  return arr.dump(2);
}

}  // namespace tensorwalk
