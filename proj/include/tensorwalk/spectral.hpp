#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "tensorwalk/chain.hpp"
#include "tensorwalk/family.hpp"

namespace tensorwalk {

// Diagonalizable eigen-system indexed by p-regular classes:
//   eigenvalue   beta_c = alpha(c)/alpha(1),
//   right vector r_c(chi) = chi(c)/chi(1),
//   left vector  l_c(chi) = conj(p_chi(c)) * chi(1) / |C_G(c)|.
// right_vectors holds r_c as column c; left_vectors holds l_c as row c.
struct SpectralData {
  std::vector<std::string> class_ids;
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right_vectors;
  Eigen::MatrixXcd left_vectors;
};

// Built from the closed-form character tables only (no numerical
// eigensolver). Throws parameter_error for the quantum family.
SpectralData brauer_spectrum(const ChainSpec& spec);

// Eigenvalue transforms for chains sharing the eigenvectors.
SpectralData lazy_spectrum(SpectralData sd, const Rational& hold);

// K^steps(start,.) reconstructed from the biorthogonal spectral sum.
std::vector<double> spectral_row(const SpectralData& sd, int start, long steps);

struct EigenResiduals {
  double right = 0.0;
  double left = 0.0;
};

// max_c ||K r_c - beta_c r_c||_inf and max_c ||l_c K - beta_c l_c||_inf,
// with K evaluated in doubles.
EigenResiduals eigen_residuals(const Kernel& k, const SpectralData& sd);

// max |(L R)(c,c') - delta| over class pairs (bilinear pairing).
double biorthogonality_residual(const SpectralData& sd);

// Exact max |K - (1/alpha_dim) D^-1 M D| with D = diag(dims).
Rational mckay_conjugacy_residual(const Kernel& k, const std::vector<std::vector<long>>& mckay,
                                  long alpha_dim);

// Enumerates all eigenvalues of the SL3(p) natural chain from closed
// forms and reports min over nontrivial classes of (1 - 3/p^2 - Re beta)
// together with whether every class satisfies Re beta <= 1 - 3/p^2.
struct Sl3BoundReport {
  double margin = 0.0;
  bool ok = false;
};
Sl3BoundReport sl3_eigen_bound(int p);

// Cosine bounds on the full lattice {2*pi*j/n}: for x not in 2*pi*Z,
//   cos(x) <= 1 - pi^2/n^2, |2 + cos x| <= 3 - pi^2/n^2,
//   |1 + 2cos x| <= 3 - 2*pi^2/n^2,
// and for lattice triples x+y+z in 2*pi*Z with some member nonzero,
//   |cos x + cos y + cos z| <= 3 - 2*pi^2/n^2.
bool cosine_lattice_bounds_hold(int n);

// JSON for the CLI `spectrum` subcommand.
std::string spectrum_to_json(const Kernel& k, const SpectralData& sd);

}  // namespace tensorwalk
