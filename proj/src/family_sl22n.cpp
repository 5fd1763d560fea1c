#include <cmath>
#include <numbers>
#include <string>

#include "families_detail.hpp"
#include "tensorwalk/errors.hpp"

namespace tensorwalk::detail {

namespace {

constexpr double kPi = std::numbers::pi;

// States are subsets of {1..n} encoded as integers, bit i-1 <-> position i.
std::string subset_label(int u, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += (u >> i) & 1 ? "1" : "0";
  }
  return s + ")";
}

// Tensoring with V_j, the walk read cyclically from position j.
Decomp vj_decomp(int n, int j, int u) {
  auto pos = [&](int t) { return (j - 1 + t) % n; };  // t = 0-based offset
  auto bit = [&](int t) { return (u >> pos(t)) & 1; };
  if (!bit(0)) return {{u | (1 << pos(0)), 1}};
  int i = 0;
  while (i < n && bit(i)) ++i;  // leading ones in cyclic order
  std::vector<std::pair<int, long>> raw;
  int cleared = u;
  for (int k = 0; k < i; ++k) {
    cleared &= ~(1 << pos(k));
    raw.emplace_back(cleared, 2);
  }
  if (i < n)
    raw.emplace_back(cleared | (1 << pos(i)), 1);
  else
    raw.emplace_back(1 << pos(0), 1);
  return merge_decomp(std::move(raw));
}

}  // namespace

CharacterData chars_sl22n(int n) {
  const long q = 1L << n;
  CharacterData cd;
  cd.group_order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
  cd.class_ids = {"1"};
  cd.centralizer_orders = {cd.group_order};
  for (long r = 1; r <= q / 2 - 1; ++r) {
    cd.class_ids.push_back("x^" + std::to_string(r));
    cd.centralizer_orders.push_back(q - 1);
  }
  for (long s = 1; s <= q / 2; ++s) {
    cd.class_ids.push_back("y^" + std::to_string(s));
    cd.centralizer_orders.push_back(q + 1);
  }
  cd.class_sizes.resize(cd.class_ids.size());
  for (std::size_t c = 0; c < cd.class_ids.size(); ++c)
    cd.class_sizes[c] = cd.group_order / cd.centralizer_orders[c];

  cd.irr_values.setZero(q, q);
  cd.proj_values.setZero(q, q);

  auto chi = [&](int subset, int cls) -> double {
    // cls: 0 identity, then x^r, then y^s.
    if (cls == 0) return static_cast<double>(1 << __builtin_popcount(subset));
    double value = 1.0;
    if (cls <= q / 2 - 1) {
      const long r = cls;
      for (int i = 1; i <= n; ++i)
        if ((subset >> (i - 1)) & 1)
          value *= 2.0 * std::cos(2.0 * kPi * (1L << (i - 1)) * r / (q - 1));
    } else {
      const long s = cls - (q / 2 - 1);
      for (int i = 1; i <= n; ++i)
        if ((subset >> (i - 1)) & 1)
          value *= 2.0 * std::cos(2.0 * kPi * (1L << (i - 1)) * s / (q + 1));
    }
    return value;
  };

  const int full = static_cast<int>(q) - 1;
  for (int u = 0; u <= full; ++u)
    for (int c = 0; c < q; ++c) cd.irr_values(u, c) = chi(u, c);

  for (int u = 0; u <= full; ++u) {
    if (u == 0) {
      cd.proj_values(0, 0) = static_cast<double>(q) * q - q;
      for (int c = 1; c < q; ++c) cd.proj_values(0, c) = c <= q / 2 - 1 ? 0.0 : 2.0;
    } else if (u == full) {
      for (int c = 0; c < q; ++c) cd.proj_values(full, c) = chi(full, c);
    } else {
      const int comp = full & ~u;
      cd.proj_values(u, 0) = chi(comp, 0) * q;
      for (int c = 1; c < q; ++c)
        cd.proj_values(u, c) = (c <= q / 2 - 1 ? 1.0 : -1.0) * chi(comp, c);
    }
  }
  return cd;
}

ChainSpec make_sl22n(int n, const std::string& choice) {
  if (n < 2) throw parameter_error("sl22n requires n >= 2");
  const long q = 1L << n;
  ChainSpec spec;
  spec.family = {Family::SL2TwoN, n};
  spec.tensor_choice = choice;
  spec.group_order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
  spec.trivial_state = 0;
  for (int u = 0; u < q; ++u) {
    spec.states.push_back(subset_label(u, n));
    const int k = __builtin_popcount(static_cast<unsigned>(u));
    spec.dims.push_back(1L << k);
    long pd;
    if (u == 0)
      pd = q * q - q;
    else
      pd = (1L << (n - k)) * q;
    spec.proj_dims.push_back(pd);
  }

  CharacterData cd = chars_sl22n(n);
  auto component = [&](int j) {
    TensorComponent c;
    c.name = "v" + std::to_string(j);
    c.alpha_dim = 2;
    c.alpha_state = 1 << (j - 1);
    c.alpha_values.resize(cd.class_ids.size());
    for (std::size_t k = 0; k < c.alpha_values.size(); ++k)
      c.alpha_values[k] = cd.irr_values(c.alpha_state, k);
    for (int u = 0; u < q; ++u) c.decomp.push_back(vj_decomp(n, j, u));
    return c;
  };

  if (choice == "uniform") {
    for (int j = 1; j <= n; ++j) {
      auto c = component(j);
      c.weight = rat(1, n);
      spec.components.push_back(std::move(c));
    }
  } else if (choice.size() >= 2 && choice[0] == 'v') {
    int j;
    try {
      j = std::stoi(choice.substr(1));
    } catch (...) {
      throw parameter_error("unknown sl22n tensor choice: " + choice);
    }
    if (j < 1 || j > n)
      throw parameter_error("sl22n tensor choice v<j> requires 1 <= j <= n");
    spec.components.push_back(component(j));
  } else {
    throw parameter_error("unknown sl22n tensor choice: " + choice);
  }
  return spec;
}

}  // namespace tensorwalk::detail
