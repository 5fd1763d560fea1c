#include <cmath>
#include <complex>
#include <numbers>

#include "families_detail.hpp"
#include "tensorwalk/errors.hpp"

namespace tensorwalk::detail {

namespace {

constexpr double kPi = std::numbers::pi;

// State order: lambda1..lambda4, chi1..chi_{n-1}.
int chi_index(int r) { return 3 + r; }

// Classes in table order: 1, x^2, a^j (1 <= j <= n-1), x, xa.
CharacterData bdn_class_frame(int n) {
  CharacterData cd;
  cd.group_order = 4ull * n;
  cd.class_ids = {"1", "x^2"};
  cd.class_sizes = {1, 1};
  cd.centralizer_orders = {4ull * n, 4ull * n};
  for (int j = 1; j <= n - 1; ++j) {
    cd.class_ids.push_back("a^" + std::to_string(j));
    cd.class_sizes.push_back(2);
    cd.centralizer_orders.push_back(2ull * n);
  }
  cd.class_ids.push_back("x");
  cd.class_sizes.push_back(n);
  cd.centralizer_orders.push_back(4);
  cd.class_ids.push_back("xa");
  cd.class_sizes.push_back(n);
  cd.centralizer_orders.push_back(4);
  return cd;
}

}  // namespace

CharacterData chars_bdn(int n) {
  CharacterData cd = bdn_class_frame(n);
  const int states = n + 3;
  const int classes = n + 3;
  cd.irr_values.setZero(states, classes);
  const std::complex<double> I(0.0, 1.0);

  auto set_row = [&](int state, std::complex<double> at1, std::complex<double> atx2,
                     auto aj_value, std::complex<double> atx, std::complex<double> atxa) {
    cd.irr_values(state, 0) = at1;
    cd.irr_values(state, 1) = atx2;
    for (int j = 1; j <= n - 1; ++j) cd.irr_values(state, 1 + j) = aj_value(j);
    cd.irr_values(state, n + 1) = atx;
    cd.irr_values(state, n + 2) = atxa;
  };

  set_row(0, 1, 1, [](int) { return 1.0; }, 1, 1);
  set_row(1, 1, 1, [](int) { return 1.0; }, -1, -1);
  auto sign = [](int j) { return j % 2 == 0 ? 1.0 : -1.0; };
  if (n % 2 == 0) {
    set_row(2, 1, 1, sign, 1, -1);
    set_row(3, 1, 1, sign, -1, 1);
  } else {
    set_row(2, 1, -1, sign, I, -I);
    set_row(3, 1, -1, sign, -I, I);
  }
  for (int r = 1; r <= n - 1; ++r)
    set_row(chi_index(r), 2, r % 2 == 0 ? 2.0 : -2.0,
            [&](int j) { return 2.0 * std::cos(kPi * j * r / n); }, 0, 0);

  // Ordinary characters: the projective cover is the irreducible itself.
  cd.proj_values = cd.irr_values;
  return cd;
}

ChainSpec make_bdn(int n, const std::string& choice) {
  if (n < 2) throw parameter_error("bdn requires n >= 2");
  if (choice != "chi1") throw parameter_error("bdn supports only the chi1 tensor choice");

  ChainSpec spec;
  spec.family = {Family::BDn, n};
  spec.tensor_choice = choice;
  spec.group_order = 4ull * n;
  spec.trivial_state = 0;
  for (int i = 1; i <= 4; ++i) {
    spec.states.push_back("lambda" + std::to_string(i));
    spec.dims.push_back(1);
  }
  for (int r = 1; r <= n - 1; ++r) {
    spec.states.push_back("chi" + std::to_string(r));
    spec.dims.push_back(2);
  }
  spec.proj_dims = spec.dims;

  TensorComponent comp;
  comp.name = "chi1";
  comp.alpha_dim = 2;
  comp.alpha_state = chi_index(1);
  comp.decomp.resize(spec.states.size());
  comp.decomp[0] = {{chi_index(1), 1}};
  comp.decomp[1] = {{chi_index(1), 1}};
  comp.decomp[2] = {{chi_index(n - 1), 1}};
  comp.decomp[3] = {{chi_index(n - 1), 1}};
  if (n == 2) {
    comp.decomp[chi_index(1)] = {{0, 1}, {1, 1}, {2, 1}, {3, 1}};
  } else {
    comp.decomp[chi_index(1)] = merge_decomp({{0, 1}, {1, 1}, {chi_index(2), 1}});
    for (int r = 2; r <= n - 2; ++r)
      comp.decomp[chi_index(r)] = {{chi_index(r - 1), 1}, {chi_index(r + 1), 1}};
    comp.decomp[chi_index(n - 1)] = merge_decomp({{chi_index(n - 2), 1}, {2, 1}, {3, 1}});
  }

  CharacterData cd = chars_bdn(n);
  comp.alpha_values.resize(cd.class_ids.size());
  for (std::size_t c = 0; c < cd.class_ids.size(); ++c)
    comp.alpha_values[c] = cd.irr_values(comp.alpha_state, c);
  spec.components.push_back(std::move(comp));
  return spec;
}

}  // namespace tensorwalk::detail
