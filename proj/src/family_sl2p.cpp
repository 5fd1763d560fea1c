#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "families_detail.hpp"
#include "tensorwalk/errors.hpp"

namespace tensorwalk::detail {

namespace {

constexpr double kPi = std::numbers::pi;

// Brauer value of the a-th symmetric power at an element whose lifted
// eigenvalues on the natural module are exp(+-i*theta): the weights
// a, a-2, ..., -a contribute exp(i*w*theta).
double weight_sum(int a, double theta) {
  double total = 0.0;
  for (int w = -a; w <= a; w += 2) total += std::cos(w * theta);
  return total;
}

Decomp natural_decomp(int p, int a) {
  if (a == 0) return {{1, 1}};
  if (a <= p - 2) return {{a - 1, 1}, {a + 1, 1}};
  return {{1, 1}, {p - 2, 2}};
}

Decomp steinberg_decomp(int p, int a) {
  if (a == 0) return {{p - 1, 1}};
  std::vector<std::pair<int, long>> raw;
  if (a % 2 == 0) {
    raw.emplace_back(p - 1, 1);
    for (int k = p - 3; k >= p - a - 1; k -= 2) raw.emplace_back(k, 2);
    raw.emplace_back(a, 1);
    for (int k = a - 2; k >= 2; k -= 2) raw.emplace_back(k, 2);
    raw.emplace_back(0, 1);
  } else {
    for (int k = p - 2; k >= p - a - 1; k -= 2) raw.emplace_back(k, 2);
    raw.emplace_back(a, 1);
    for (int k = a - 2; k >= 1; k -= 2) raw.emplace_back(k, 2);
  }
  return merge_decomp(std::move(raw));
}

void validate_p(int p) {
  if (p < 5 || p % 2 == 0 || !is_prime(p))
    throw parameter_error("sl2p requires an odd prime p >= 5, got " + std::to_string(p));
}

}  // namespace

CharacterData chars_sl2p(int p) {
  CharacterData cd;
  cd.group_order = static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) * p - 1);
  cd.class_ids = {"1", "-1"};
  cd.centralizer_orders = {cd.group_order, cd.group_order};
  for (int r = 1; r <= (p - 3) / 2; ++r) {
    cd.class_ids.push_back("x^" + std::to_string(r));
    cd.centralizer_orders.push_back(p - 1);
  }
  for (int s = 1; s <= (p - 1) / 2; ++s) {
    cd.class_ids.push_back("y^" + std::to_string(s));
    cd.centralizer_orders.push_back(p + 1);
  }
  cd.class_sizes.resize(cd.class_ids.size());
  for (std::size_t c = 0; c < cd.class_ids.size(); ++c)
    cd.class_sizes[c] = cd.group_order / cd.centralizer_orders[c];

  const int n = p;
  cd.irr_values.setZero(n, n);
  cd.proj_values.setZero(n, n);
  for (int a = 0; a < p; ++a) {
    cd.irr_values(a, 0) = a + 1;
    cd.irr_values(a, 1) = (a % 2 == 0 ? 1.0 : -1.0) * (a + 1);
    int col = 2;
    for (int r = 1; r <= (p - 3) / 2; ++r)
      cd.irr_values(a, col++) = weight_sum(a, 2.0 * kPi * r / (p - 1));
    for (int s = 1; s <= (p - 1) / 2; ++s)
      cd.irr_values(a, col++) = weight_sum(a, 2.0 * kPi * s / (p + 1));
  }
  for (int a = 0; a < p; ++a) {
    const bool edge = a == 0 || a == p - 1;
    cd.proj_values(a, 0) = edge ? p : 2 * p;
    cd.proj_values(a, 1) = (a % 2 == 0 ? 1.0 : -1.0) * (edge ? p : 2 * p);
    int col = 2;
    for (int r = 1; r <= (p - 3) / 2; ++r)
      cd.proj_values(a, col++) = edge ? 1.0 : 2.0 * std::cos(2.0 * kPi * a * r / (p - 1));
    for (int s = 1; s <= (p - 1) / 2; ++s) {
      double v;
      if (a == 0)
        v = 1.0 - 2.0 * std::cos(4.0 * kPi * s / (p + 1));
      else if (a == p - 1)
        v = -1.0;
      else
        v = -2.0 * std::cos((2.0 * a + 4.0) * kPi * s / (p + 1));
      cd.proj_values(a, col++) = v;
    }
  }
  return cd;
}

ChainSpec make_sl2p(int p, const std::string& choice) {
  validate_p(p);
  ChainSpec spec;
  spec.family = {Family::SL2p, p};
  spec.tensor_choice = choice;
  spec.group_order = static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) * p - 1);
  spec.trivial_state = 0;
  for (int a = 0; a < p; ++a) {
    spec.states.push_back(std::to_string(a));
    spec.dims.push_back(a + 1);
    spec.proj_dims.push_back(a == 0 || a == p - 1 ? p : 2 * p);
  }

  CharacterData cd = chars_sl2p(p);
  auto alpha_row = [&](int state) {
    std::vector<std::complex<double>> row(cd.class_ids.size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = cd.irr_values(state, c);
    return row;
  };
  auto natural_component = [&]() {
    TensorComponent c;
    c.name = "natural";
    c.alpha_dim = 2;
    c.alpha_state = 1;
    c.alpha_values = alpha_row(1);
    for (int a = 0; a < p; ++a) c.decomp.push_back(natural_decomp(p, a));
    return c;
  };
  auto steinberg_component = [&]() {
    TensorComponent c;
    c.name = "steinberg";
    c.alpha_dim = p;
    c.alpha_state = p - 1;
    c.alpha_values = alpha_row(p - 1);
    for (int a = 0; a < p; ++a) c.decomp.push_back(steinberg_decomp(p, a));
    return c;
  };

  if (choice == "natural") {
    spec.components.push_back(natural_component());
  } else if (choice == "steinberg") {
    spec.components.push_back(steinberg_component());
  } else if (choice == "sum") {
    TensorComponent c;
    c.name = "sum";
    c.alpha_dim = p + 2;
    c.alpha_values.resize(cd.class_ids.size());
    for (std::size_t k = 0; k < c.alpha_values.size(); ++k)
      c.alpha_values[k] = cd.irr_values(1, k) + cd.irr_values(p - 1, k);
    for (int a = 0; a < p; ++a) {
      auto nat = natural_decomp(p, a);
      auto st = steinberg_decomp(p, a);
      nat.insert(nat.end(), st.begin(), st.end());
      c.decomp.push_back(merge_decomp(std::move(nat)));
    }
    spec.components.push_back(std::move(c));
  } else if (choice == "mixed") {
    auto st = steinberg_component();
    auto nat = natural_component();
    st.weight = rat(1, 2);
    nat.weight = rat(1, 2);
    spec.components.push_back(std::move(st));
    spec.components.push_back(std::move(nat));
  } else {
    throw parameter_error("unknown sl2p tensor choice: " + choice);
  }
  return spec;
}

}  // namespace tensorwalk::detail
