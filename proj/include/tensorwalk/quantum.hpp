#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "tensorwalk/rational.hpp"

namespace tensorwalk {

// Generalized eigen-system of the quantum V1 chain, n odd. For each
// j = 1..m with m = (n-1)/2 and lambda_j = cos(2*pi*j/n) there is a 2x2
// Jordan block with
//   K R_j  = lambda_j R_j,            L_j K  = lambda_j L_j,
//   K Rp_j = lambda_j Rp_j + R_j,     Lp_j K = lambda_j Lp_j + L_j,
//   L_j R_j = 0,  L_j Rp_j = Lp_j R_j = d_j != 0,  Lp_j Rp_j = dp_j.
// Columns of R/Rp and rows of L/Lp hold the vectors for j = 1..m.
struct JordanSpectralData {
  int n = 0;
  int m = 0;
  std::vector<double> lambdas;
  Eigen::MatrixXd R, Rp;
  Eigen::MatrixXd L, Lp;
  std::vector<double> d, dp;
};

// Builds all vectors from closed forms. Throws parameter_error unless n
// is odd and >= 3.
JordanSpectralData jordan_data(int n);

// The printed closed form (n/32)(4/sin(t) - (n+1)/sin^3(t)), t = 2*pi*j/n.
// Kept verbatim as a diagnostic; it disagrees with the direct pairing
// (see dj_direct) and is never used in reconstructions.
double dj_closed(int n, int j);

// d_j as the inner product Lp_j . R_j, asserted equal to L_j . Rp_j
// within 1e-10.
double dj_direct(int n, int j);
double djprime_direct(int n, int j);

// Row K^steps(0,.) reconstructed from the generalized eigenvectors.
std::vector<double> jordan_power_row(int n, long steps);

// Diagnostic line per j for the CLI quantum spectrum report.
struct QuantumPairingRow {
  int j = 0;
  double lambda = 0.0;
  double d_direct = 0.0;
  double d_closed = 0.0;
  double d_ratio = 0.0;
  double dprime = 0.0;
  double residual_max = 0.0;
};
std::vector<QuantumPairingRow> quantum_pairing_report(int n);
std::string quantum_spectrum_to_json(int n);

// Exact verification of the Steinberg-chain spectrum: McKay matrix
// eigenvector relations over the integers, the characteristic polynomial
// x^(n-1) * (x - n), and agreement of the chain's stationary vector with
// the closed form [2(j+1)/n^2, ..., 1/n].
struct SteinbergSpectrumReport {
  int n = 0;
  bool perron_right = false;      // M r0 = n r0, r0 = dims
  bool perron_left = false;       // l0 M = n l0, l0 = [2,...,2,1]
  bool kernel_vectors = false;    // M r_j = 0 for all j
  bool jordan_right = false;      // M r'_j = 2 r_j (4 r_1 for n = 3)
  bool jordan_left = false;       // (1/2) l'_j M = l_j
  bool char_poly = false;         // x^(n-1) (x - n), exact
  bool stationary_match = false;  // kernel pi equals the closed form
  bool all() const {
    return perron_right && perron_left && kernel_vectors && jordan_right && jordan_left &&
           char_poly && stationary_match;
  }
};
SteinbergSpectrumReport steinberg_spectrum(int n);

}  // namespace tensorwalk
