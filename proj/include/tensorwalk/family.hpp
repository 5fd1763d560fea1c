#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tensorwalk/rational.hpp"

namespace tensorwalk {

// The six supported chain families. The integer parameter is n for BDn,
// SL2TwoN and QuantumSL2, and the prime p for SL2p, SL2pSquared and SL3p.
enum class Family { BDn, SL2p, SL2pSquared, SL2TwoN, SL3p, QuantumSL2 };

struct FamilyId {
  Family tag;
  int param;
};

std::string family_name(Family tag);
Family family_from_name(const std::string& name);

// Multiset of (state index, multiplicity) composition factors.
using Decomp = std::vector<std::pair<int, long>>;

// One tensoring module: its dimension, its decomposition rule per state,
// its Brauer character values on the p-regular classes (empty for the
// quantum family), and its weight within the chain.
struct TensorComponent {
  std::string name;
  long alpha_dim = 0;
  Rational weight = Rational(1);
  std::vector<Decomp> decomp;
  std::vector<std::complex<double>> alpha_values;
  int alpha_state = -1;  // state index of alpha when irreducible, else -1
};

// A fully instantiated chain: state labels, dimensions chi(1), projective
// cover dimensions p_chi(1), and one tensoring component per mixture part.
struct ChainSpec {
  FamilyId family{Family::BDn, 0};
  std::string tensor_choice;
  std::vector<std::string> states;
  std::vector<long> dims;
  std::vector<long> proj_dims;
  std::uint64_t group_order = 0;  // 0 means "not a group" (QuantumSL2)
  int trivial_state = 0;
  std::vector<TensorComponent> components;

  int size() const { return static_cast<int>(states.size()); }
  bool is_mixture() const { return components.size() > 1; }
  long alpha_dim() const { return components.front().alpha_dim; }
};

// Per-class character data: p-regular class representatives, class sizes,
// centralizer orders, and the irreducible / projective-indecomposable
// Brauer character values (rows = states, columns = classes).
struct CharacterData {
  std::vector<std::string> class_ids;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> centralizer_orders;
  Eigen::MatrixXcd irr_values;
  Eigen::MatrixXcd proj_values;
  std::uint64_t group_order = 0;
};

// Valid tensor choices per family; the first entry is the default.
std::vector<std::string> tensor_choices(Family tag);

// Builds the chain instance. Throws parameter_error when the family
// parameters violate their constraints or the tensor choice is unknown.
ChainSpec make_spec(FamilyId family, const std::string& tensor_choice);
ChainSpec make_spec(FamilyId family);  // default tensor choice

// Composition factors of state (x) alpha for one mixture component.
const Decomp& tensor_decompose(const ChainSpec& spec, int state, int component = 0);

// Exact stationary distribution: proj_dims[s]*dims[s] normalized.
std::vector<Rational> stationary(const ChainSpec& spec);

// Brauer character tables. Throws parameter_error for QuantumSL2, whose
// spectral data lives in quantum.hpp.
CharacterData character_data(const ChainSpec& spec);

// Integer multiplicity matrix M[i][j] = multiplicity of j in decomp(i).
std::vector<std::vector<long>> mckay_matrix(const ChainSpec& spec, int component = 0);

// Exact check that sum of mult*dim over decomp(s) equals alpha_dim*dim(s)
// for every state and component. Throws consistency_error on violation.
void check_dimension_conservation(const ChainSpec& spec);

// JSON serialization used by `kernel --dump-spec`.
std::string spec_to_json(const ChainSpec& spec);

// Orthogonality residuals of a character table. `row` is the maximum
// deviation of (1/|G|) sum_c |c^G| p_chi(c) conj(rho(c)) from identity;
// `column` the deviation of sum_chi p_chi(g) conj(chi(c)) / |C(c)|.
struct OrthogonalityResiduals {
  double row = 0.0;
  double column = 0.0;
};
OrthogonalityResiduals orthogonality_residuals(const CharacterData& cd);

}  // namespace tensorwalk
