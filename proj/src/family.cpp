#include "tensorwalk/family.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

#include "families_detail.hpp"
#include "tensorwalk/errors.hpp"

namespace tensorwalk {

namespace detail {

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

Decomp merge_decomp(std::vector<std::pair<int, long>> raw) {
  std::map<int, long> acc;
  for (auto& [state, mult] : raw) acc[state] += mult;
  Decomp out;
  for (auto& [state, mult] : acc)
    if (mult != 0) out.emplace_back(state, mult);
  return out;
}

}  // namespace detail

std::string family_name(Family tag) {
  switch (tag) {
    case Family::BDn: return "bdn";
    case Family::SL2p: return "sl2p";
    case Family::SL2pSquared: return "sl2p2";
    case Family::SL2TwoN: return "sl22n";
    case Family::SL3p: return "sl3p";
    case Family::QuantumSL2: return "quantum";
  }
  throw parameter_error("unknown family tag");
}

Family family_from_name(const std::string& name) {
  if (name == "bdn") return Family::BDn;
  if (name == "sl2p") return Family::SL2p;
  if (name == "sl2p2") return Family::SL2pSquared;
  if (name == "sl22n") return Family::SL2TwoN;
  if (name == "sl3p") return Family::SL3p;
  if (name == "quantum") return Family::QuantumSL2;
  throw parameter_error("unknown family: " + name);
}

std::vector<std::string> tensor_choices(Family tag) {
  switch (tag) {
    case Family::BDn: return {"chi1"};
    case Family::SL2p: return {"natural", "steinberg", "sum", "mixed"};
    case Family::SL2pSquared: return {"natural", "oneone", "mixed"};
    case Family::SL2TwoN: return {"v1", "uniform"};  // plus "v<j>" for 1 <= j <= n
    case Family::SL3p: return {"natural"};
    case Family::QuantumSL2: return {"v1", "steinberg"};
  }
  throw parameter_error("unknown family tag");
}

ChainSpec make_spec(FamilyId family, const std::string& tensor_choice) {
  std::string choice = tensor_choice;
  if (choice == "steinberg-mixed") choice = "mixed";  // CLI alias
  ChainSpec spec;
  switch (family.tag) {
    case Family::BDn: spec = detail::make_bdn(family.param, choice); break;
    case Family::SL2p: spec = detail::make_sl2p(family.param, choice); break;
    case Family::SL2pSquared: spec = detail::make_sl2p2(family.param, choice); break;
    case Family::SL2TwoN: spec = detail::make_sl22n(family.param, choice); break;
    case Family::SL3p: spec = detail::make_sl3p(family.param, choice); break;
    case Family::QuantumSL2: spec = detail::make_quantum(family.param, choice); break;
  }
  check_dimension_conservation(spec);
  return spec;
}

ChainSpec make_spec(FamilyId family) {
  return make_spec(family, tensor_choices(family.tag).front());
}

const Decomp& tensor_decompose(const ChainSpec& spec, int state, int component) {
  if (component < 0 || component >= static_cast<int>(spec.components.size()))
    throw lookup_error("no such tensor component");
  const auto& dec = spec.components[component].decomp;
  if (state < 0 || state >= static_cast<int>(dec.size()))
    throw lookup_error("unknown state index " + std::to_string(state));
  return dec[state];
}

std::vector<Rational> stationary(const ChainSpec& spec) {
  Rational total(0);
  std::vector<Rational> pi(spec.states.size());
  for (std::size_t s = 0; s < pi.size(); ++s) {
    pi[s] = Rational(spec.proj_dims[s]) * Rational(spec.dims[s]);
    total += pi[s];
  }
  for (auto& v : pi) {
    v /= total;
    v.canonicalize();
  }
  return pi;
}

CharacterData character_data(const ChainSpec& spec) {
  CharacterData cd;
  switch (spec.family.tag) {
    case Family::BDn: cd = detail::chars_bdn(spec.family.param); break;
    case Family::SL2p: cd = detail::chars_sl2p(spec.family.param); break;
    case Family::SL2pSquared: cd = detail::chars_sl2p2(spec.family.param); break;
    case Family::SL2TwoN: cd = detail::chars_sl22n(spec.family.param); break;
    case Family::SL3p: cd = detail::chars_sl3p(spec.family.param); break;
    case Family::QuantumSL2:
      throw parameter_error(
          "the quantum family has no Brauer table; its spectral data lives in quantum.hpp");
  }
  if (cd.irr_values.rows() != static_cast<long>(spec.states.size()) ||
      cd.irr_values.cols() != static_cast<long>(cd.class_ids.size()) ||
      cd.class_ids.size() != spec.states.size())
    throw consistency_error("class/state count mismatch in character data");
  for (std::size_t c = 0; c < cd.class_ids.size(); ++c)
    if (cd.class_sizes[c] * cd.centralizer_orders[c] != cd.group_order)
      throw consistency_error("class size times centralizer differs from group order");
  return cd;
}

std::vector<std::vector<long>> mckay_matrix(const ChainSpec& spec, int component) {
  if (component < 0 || component >= static_cast<int>(spec.components.size()))
    throw lookup_error("no such tensor component");
  const int n = spec.size();
  std::vector<std::vector<long>> mat(n, std::vector<long>(n, 0));
  for (int s = 0; s < n; ++s)
    for (auto& [t, mult] : spec.components[component].decomp[s]) mat[s][t] = mult;
  return mat;
}

void check_dimension_conservation(const ChainSpec& spec) {
  for (const auto& comp : spec.components) {
    for (int s = 0; s < spec.size(); ++s) {
      long long total = 0;
      for (auto& [t, mult] : comp.decomp[s]) {
        if (t < 0 || t >= spec.size()) throw consistency_error("decomposition leaves state space");
        if (mult <= 0) throw consistency_error("nonpositive multiplicity");
        total += static_cast<long long>(mult) * spec.dims[t];
      }
      if (total != static_cast<long long>(comp.alpha_dim) * spec.dims[s])
        throw consistency_error("dimension conservation fails at state " + spec.states[s] +
                                " for component " + comp.name);
    }
  }
}

std::string spec_to_json(const ChainSpec& spec) {
  nlohmann::json j;
  j["family"] = family_name(spec.family.tag);
  const bool prime_family = spec.family.tag == Family::SL2p ||
                            spec.family.tag == Family::SL2pSquared ||
                            spec.family.tag == Family::SL3p;
  j["params"] = {{prime_family ? "p" : "n", spec.family.param}};
  j["tensor"] = spec.tensor_choice;
  j["states"] = spec.states;
  j["dims"] = spec.dims;
  auto decomp_json = [](const TensorComponent& comp) {
    nlohmann::json d = nlohmann::json::array();
    for (std::size_t s = 0; s < comp.decomp.size(); ++s) {
      nlohmann::json entries = nlohmann::json::array();
      for (auto& [t, mult] : comp.decomp[s]) entries.push_back({t, mult});
      d.push_back({static_cast<long>(s), entries});
    }
    return d;
  };
  if (!spec.is_mixture()) {
    j["alpha_dim"] = spec.components.front().alpha_dim;
    j["decomp"] = decomp_json(spec.components.front());
  } else {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : spec.components)
      comps.push_back({{"name", comp.name},
                       {"weight", rat_str(comp.weight)},
                       {"alpha_dim", comp.alpha_dim},
                       {"decomp", decomp_json(comp)}});
    j["components"] = comps;
  }
  return j.dump(2);
}

OrthogonalityResiduals orthogonality_residuals(const CharacterData& cd) {
  const long n = cd.irr_values.rows();
  const double order = static_cast<double>(cd.group_order);
  Eigen::VectorXd class_weight(n), inv_cent(n);
  for (long c = 0; c < n; ++c) {
    class_weight(c) = static_cast<double>(cd.class_sizes[c]) / order;
    inv_cent(c) = 1.0 / static_cast<double>(cd.centralizer_orders[c]);
  }
  // (1/|G|) sum_c |c^G| p_chi(c) conj(rho(c)) = delta_{chi,rho}
  Eigen::MatrixXcd row = cd.proj_values * class_weight.asDiagonal() *
                         cd.irr_values.conjugate().transpose();
  // sum_chi p_chi(g) conj(chi(c)) / |C(c)| = delta_{g,c}
  Eigen::MatrixXcd col = cd.proj_values.transpose() * cd.irr_values.conjugate() *
                         inv_cent.asDiagonal();
  OrthogonalityResiduals res;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const double dij = i == j ? 1.0 : 0.0;
      res.row = std::max(res.row, std::abs(row(i, j) - dij));
      res.column = std::max(res.column, std::abs(col(i, j) - dij));
    }
  return res;
}

}  // namespace tensorwalk
