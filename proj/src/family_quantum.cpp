#include <string>

#include "families_detail.hpp"
#include "tensorwalk/errors.hpp"

namespace tensorwalk::detail {

ChainSpec make_quantum(int n, const std::string& choice) {
  if (n < 3 || n % 2 == 0)
    throw parameter_error("quantum family requires odd n >= 3, got " + std::to_string(n));

  ChainSpec spec;
  spec.family = {Family::QuantumSL2, n};
  spec.tensor_choice = choice;
  spec.group_order = 0;  // not a group
  spec.trivial_state = 0;
  for (int r = 0; r < n; ++r) {
    spec.states.push_back(std::to_string(r));
    spec.dims.push_back(r + 1);
    spec.proj_dims.push_back(r == n - 1 ? n : 2 * n);
  }

  TensorComponent comp;
  comp.name = choice;
  comp.decomp.resize(n);
  if (choice == "v1") {
    comp.alpha_dim = 2;
    comp.alpha_state = 1;
    comp.decomp[0] = {{1, 1}};
    for (int r = 1; r <= n - 2; ++r) comp.decomp[r] = {{r - 1, 1}, {r + 1, 1}};
    comp.decomp[n - 1] = {{0, 2}, {n - 2, 2}};
  } else if (choice == "steinberg") {
    comp.alpha_dim = n;
    comp.alpha_state = n - 1;
    comp.decomp[0] = {{n - 1, 1}};
    for (int r = 1; r <= n - 1; ++r) {
      std::vector<std::pair<int, long>> raw;
      for (int j = n - 1 - r; j <= n - 2; j += 2) {
        raw.emplace_back(j, 2);
        raw.emplace_back(n - 2 - j, 2);
      }
      if (r % 2 == 0) raw.emplace_back(n - 1, 1);
      comp.decomp[r] = merge_decomp(std::move(raw));
    }
  } else {
    throw parameter_error("unknown quantum tensor choice: " + choice);
  }
  spec.components.push_back(std::move(comp));
  return spec;
}

}  // namespace tensorwalk::detail
