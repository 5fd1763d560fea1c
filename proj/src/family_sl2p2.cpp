#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "families_detail.hpp"
#include "tensorwalk/errors.hpp"

namespace tensorwalk::detail {

namespace {

constexpr double kPi = std::numbers::pi;

double weight_sum(int a, double theta) {
  double total = 0.0;
  for (int w = -a; w <= a; w += 2) total += std::cos(w * theta);
  return total;
}

void validate_p(int p) {
  if (p < 5 || p % 2 == 0 || !is_prime(p))
    throw parameter_error("sl2p2 requires an odd prime p >= 5, got " + std::to_string(p));
}

struct Frame {
  int p;
  int idx(int a, int b) const { return a * p + b; }

  // Composition factors of (a,b) (x) (1,0).
  Decomp tens10(int a, int b) const {
    if (a == 0) return {{idx(1, b), 1}};
    if (a <= p - 2) return {{idx(a - 1, b), 1}, {idx(a + 1, b), 1}};
    std::vector<std::pair<int, long>> raw{{idx(p - 2, b), 2}};
    // remaining factor: twisted natural times the twisted second slot
    if (b == 0) {
      raw.emplace_back(idx(0, 1), 1);
    } else if (b <= p - 2) {
      raw.emplace_back(idx(0, b - 1), 1);
      raw.emplace_back(idx(0, b + 1), 1);
    } else {
      raw.emplace_back(idx(0, p - 2), 2);
      raw.emplace_back(idx(1, 0), 1);
    }
    return merge_decomp(std::move(raw));
  }

  // Composition factors of (a,b) (x) (0,1).
  Decomp tens01(int a, int b) const {
    if (b == 0) return {{idx(a, 1), 1}};
    if (b <= p - 2) return {{idx(a, b - 1), 1}, {idx(a, b + 1), 1}};
    std::vector<std::pair<int, long>> raw{{idx(a, p - 2), 2}};
    if (a == 0) {
      raw.emplace_back(idx(1, 0), 1);
    } else if (a <= p - 2) {
      raw.emplace_back(idx(a - 1, 0), 1);
      raw.emplace_back(idx(a + 1, 0), 1);
    } else {
      raw.emplace_back(idx(p - 2, 0), 2);
      raw.emplace_back(idx(0, 1), 1);
    }
    return merge_decomp(std::move(raw));
  }

  // (1,1) = (1,0) then (0,1); composition multisets are multiplicative.
  Decomp tens11(int a, int b) const {
    std::vector<std::pair<int, long>> raw;
    for (auto& [t, mult] : tens10(a, b)) {
      const int ta = t / p, tb = t % p;
      for (auto& [u, m2] : tens01(ta, tb)) raw.emplace_back(u, mult * m2);
    }
    return merge_decomp(std::move(raw));
  }
};

}  // namespace

CharacterData chars_sl2p2(int p) {
  validate_p(p);
  const long q = static_cast<long>(p) * p;
  CharacterData cd;
  cd.group_order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
  cd.class_ids = {"1", "-1"};
  cd.centralizer_orders = {cd.group_order, cd.group_order};
  const int xmax = (q - 1) / 2 - 1, ymax = (q + 1) / 2 - 1;
  for (int r = 1; r <= xmax; ++r) {
    cd.class_ids.push_back("x^" + std::to_string(r));
    cd.centralizer_orders.push_back(q - 1);
  }
  for (int s = 1; s <= ymax; ++s) {
    cd.class_ids.push_back("y^" + std::to_string(s));
    cd.centralizer_orders.push_back(q + 1);
  }
  cd.class_sizes.resize(cd.class_ids.size());
  for (std::size_t c = 0; c < cd.class_ids.size(); ++c)
    cd.class_sizes[c] = cd.group_order / cd.centralizer_orders[c];

  const int n = p * p;
  cd.irr_values.setZero(n, n);
  cd.proj_values.setZero(n, n);
  Frame f{p};

  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      const int row = f.idx(a, b);
      const double dim = (a + 1.0) * (b + 1.0);
      cd.irr_values(row, 0) = dim;
      cd.irr_values(row, 1) = ((a + b) % 2 == 0 ? 1.0 : -1.0) * dim;
      int col = 2;
      for (int r = 1; r <= xmax; ++r, ++col) {
        const double th = 2.0 * kPi * r / (q - 1);
        cd.irr_values(row, col) = weight_sum(a, th) * weight_sum(b, p * th);
      }
      for (int s = 1; s <= ymax; ++s, ++col) {
        const double th = 2.0 * kPi * s / (q + 1);
        cd.irr_values(row, col) = weight_sum(a, th) * weight_sum(b, p * th);
      }
    }

  const double q2 = static_cast<double>(q);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      const int row = f.idx(a, b);
      const double sgn = (a + b) % 2 == 0 ? 1.0 : -1.0;
      if (a == p - 1 && b == p - 1) {
        cd.proj_values(row, 0) = q2;
        cd.proj_values(row, 1) = q2;
        int col = 2;
        for (int r = 1; r <= xmax; ++r) cd.proj_values(row, col++) = 1.0;
        for (int s = 1; s <= ymax; ++s) cd.proj_values(row, col++) = -1.0;
      } else if (a == 0 && b == 0) {
        cd.proj_values(row, 0) = 3.0 * q2;
        cd.proj_values(row, 1) = 3.0 * q2;
        int col = 2;
        for (int r = 1; r <= xmax; ++r) {
          const double c1 = std::cos(2.0 * kPi * r / (p + 1));
          cd.proj_values(row, col++) = 4.0 * c1 * c1 - 1.0;
        }
        for (int s = 1; s <= ymax; ++s)
          cd.proj_values(row, col++) =
              1.0 - 4.0 * std::cos(2.0 * (p - 1) * kPi * s / (q + 1)) *
                        std::cos(2.0 * (p + 1) * kPi * s / (q + 1));
      } else if (a == p - 1) {
        cd.proj_values(row, 0) = 2.0 * q2;
        cd.proj_values(row, 1) = sgn * 2.0 * q2;
        int col = 2;
        for (int r = 1; r <= xmax; ++r)
          cd.proj_values(row, col++) =
              2.0 * std::cos(2.0 * (p * (b + 1.0) - 1.0) * kPi * r / (q - 1));
        for (int s = 1; s <= ymax; ++s)
          cd.proj_values(row, col++) =
              -2.0 * std::cos(2.0 * (p * (b + 1.0) + 1.0) * kPi * s / (q + 1));
      } else if (b == p - 1) {
        cd.proj_values(row, 0) = 2.0 * q2;
        cd.proj_values(row, 1) = sgn * 2.0 * q2;
        int col = 2;
        for (int r = 1; r <= xmax; ++r)
          cd.proj_values(row, col++) = 2.0 * std::cos(2.0 * (p - 1.0 - a) * kPi * r / (q - 1));
        for (int s = 1; s <= ymax; ++s)
          cd.proj_values(row, col++) = -2.0 * std::cos(2.0 * (p - 1.0 - a) * kPi * s / (q + 1));
      } else {
        cd.proj_values(row, 0) = 4.0 * q2;
        cd.proj_values(row, 1) = sgn * 4.0 * q2;
        int col = 2;
        for (int r = 1; r <= xmax; ++r)
          cd.proj_values(row, col++) =
              4.0 * std::cos(2.0 * (p - 1.0 - a) * kPi * r / (q - 1)) *
              std::cos(2.0 * (p * (b + 1.0) - 1.0) * kPi * r / (q - 1));
        for (int s = 1; s <= ymax; ++s)
          cd.proj_values(row, col++) =
              -4.0 * std::cos(2.0 * (p - 1.0 - a) * kPi * s / (q + 1)) *
              std::cos(2.0 * (p * (b + 1.0) + 1.0) * kPi * s / (q + 1));
      }
    }
  return cd;
}

ChainSpec make_sl2p2(int p, const std::string& choice) {
  validate_p(p);
  const long q = static_cast<long>(p) * p;
  ChainSpec spec;
  spec.family = {Family::SL2pSquared, p};
  spec.tensor_choice = choice;
  spec.group_order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
  spec.trivial_state = 0;
  Frame f{p};
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      spec.states.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
      spec.dims.push_back(static_cast<long>(a + 1) * (b + 1));
      long pd;
      if (a == p - 1 && b == p - 1)
        pd = q;
      else if (a == 0 && b == 0)
        pd = 3 * q;
      else if (a == p - 1 || b == p - 1)
        pd = 2 * q;
      else
        pd = 4 * q;
      spec.proj_dims.push_back(pd);
    }

  CharacterData cd = chars_sl2p2(p);
  auto component = [&](const std::string& name, bool one_one) {
    TensorComponent c;
    c.name = name;
    c.alpha_dim = one_one ? 4 : 2;
    c.alpha_state = one_one ? f.idx(1, 1) : f.idx(1, 0);
    c.alpha_values.resize(cd.class_ids.size());
    for (std::size_t k = 0; k < c.alpha_values.size(); ++k)
      c.alpha_values[k] = cd.irr_values(c.alpha_state, k);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        c.decomp.push_back(one_one ? f.tens11(a, b) : f.tens10(a, b));
    return c;
  };

  if (choice == "natural") {
    spec.components.push_back(component("natural", false));
  } else if (choice == "oneone") {
    spec.components.push_back(component("oneone", true));
  } else if (choice == "mixed") {
    auto c11 = component("oneone", true);
    auto c10 = component("natural", false);
    c11.weight = rat(1, 2);
    c10.weight = rat(1, 2);
    spec.components.push_back(std::move(c11));
    spec.components.push_back(std::move(c10));
  } else {
    throw parameter_error("unknown sl2p2 tensor choice: " + choice);
  }
  return spec;
}

}  // namespace tensorwalk::detail
