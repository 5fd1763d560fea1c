#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "families_detail.hpp"
#include "tensorwalk/errors.hpp"

namespace tensorwalk::detail {

namespace {

constexpr double kPi = std::numbers::pi;
using cd_t = std::complex<double>;

void validate_p(int p) {
  if (p < 11 || !is_prime(p) || p % 3 != 2)
    throw parameter_error("sl3p requires a prime p >= 11 with p = 2 mod 3, got " +
                          std::to_string(p));
}

long f2(long x, long y) { return x * y * (x + y) / 2; }

long dim_sl3(int p, int a, int b) {
  if (a + b <= p - 2) return f2(a + 1, b + 1);
  return f2(a + 1, b + 1) - f2(p - a - 1, p - b - 1);
}

// Class frame: identity, x-orbits (order p^2+p+1), y-orbits (order
// p^2-1 minus the split part), diagonal z(k,k), regular diagonal z(l,m).
struct Sl3Classes {
  int p;
  long m1, m2, m3;
  std::vector<std::string> ids;
  std::vector<std::uint64_t> cents;
  // class kinds and indices
  enum Kind { kOne, kX, kY, kZDiag, kZReg };
  struct Entry {
    Kind kind;
    long i = 0, j = 0;
  };
  std::vector<Entry> entries;
  std::uint64_t order;

  explicit Sl3Classes(int p_) : p(p_) {
    m1 = static_cast<long>(p) * p + p + 1;
    m2 = static_cast<long>(p) * p - 1;
    m3 = p - 1;
    const std::uint64_t up = p;
    order = up * up * up * (up * up * up - 1) * (up * up - 1);
    ids.push_back("1");
    cents.push_back(order);
    entries.push_back({kOne, 0, 0});
    for (long r = 1; r < m1; ++r) {
      const long r1 = (r * p) % m1, r2 = (r1 * p) % m1;
      if (r <= r1 && r <= r2) {
        ids.push_back("x^" + std::to_string(r));
        cents.push_back(m1);
        entries.push_back({kX, r, 0});
      }
    }
    for (long s = 1; s < m2; ++s) {
      if (s % (p + 1) == 0) continue;  // split torus part, counted as z-classes
      const long s1 = (s * p) % m2;
      if (s <= s1) {
        ids.push_back("y^" + std::to_string(s));
        cents.push_back(m2);
        entries.push_back({kY, s, 0});
      }
    }
    for (long k = 1; k <= p - 2; ++k) {
      ids.push_back("z(" + std::to_string(k) + "," + std::to_string(k) + ")");
      cents.push_back(static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) * p - 1) *
                      (p - 1));
      entries.push_back({kZDiag, k, 0});
    }
    for (long l = 0; l < m3; ++l)
      for (long m = 0; m < m3; ++m) {
        const long t = ((-l - m) % m3 + m3) % m3;
        if (l == m || l == t || m == t) continue;
        // canonical representative: lexicographic minimum over the six
        // ordered pairs drawn from the triple
        bool minimal = true;
        const std::array<std::pair<long, long>, 6> perms{
            {{l, m}, {l, t}, {m, l}, {m, t}, {t, l}, {t, m}}};
        for (auto& pr : perms)
          if (pr < std::make_pair(l, m)) minimal = false;
        if (!minimal) continue;
        ids.push_back("z(" + std::to_string(l) + "," + std::to_string(m) + ")");
        cents.push_back(static_cast<std::uint64_t>(p - 1) * (p - 1));
        entries.push_back({kZReg, l, m});
      }
  }

  int count() const { return static_cast<int>(ids.size()); }

  // Lifted eigenvalue exponent triples: class c acts on the natural
  // module with eigenvalues w^e for the root of unity w of order mod(c).
  std::array<long, 3> exponents(const Entry& e) const {
    switch (e.kind) {
      case kOne: return {0, 0, 0};
      case kX: return {e.i % m1, (e.i * p) % m1, (e.i * p % m1 * p) % m1};
      case kY: return {e.i % m2, (e.i * p) % m2, ((-(e.i) * (p + 1)) % m2 + m2) % m2};
      case kZDiag: return {e.i, e.i, ((-2 * e.i) % m3 + m3) % m3};
      case kZReg: return {e.i, e.j, ((-(e.i) - e.j) % m3 + m3) % m3};
    }
    return {0, 0, 0};
  }

  long modulus(const Entry& e) const {
    switch (e.kind) {
      case kOne: return 1;
      case kX: return m1;
      case kY: return m2;
      default: return m3;
    }
  }
};

// Schur polynomial s_(a+b, b, 0)(z1, z2, z3) via the bialternant, with a
// confluent variant for the z(k,k) classes where z1 = z2.
struct ClassPowers {
  std::array<std::vector<cd_t>, 3> zp;  // zp[i][k] = z_i^k
  bool confluent = false;

  ClassPowers(const Sl3Classes& cls, const Sl3Classes::Entry& e, int max_exp) {
    const long mod = cls.modulus(e);
    auto ex = cls.exponents(e);
    confluent = e.kind == Sl3Classes::kZDiag;
    for (int i = 0; i < 3; ++i) {
      zp[i].resize(static_cast<std::size_t>(max_exp) + 1);
      for (int k = 0; k <= max_exp; ++k) {
        const long r = (ex[i] * k) % mod;
        const double ang = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(mod);
        zp[i][k] = {std::cos(ang), std::sin(ang)};
      }
    }
  }
};

cd_t det3(const std::array<std::array<cd_t, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Weyl (Schur) character of highest weight (a,b) at the class.
cd_t weyl_value(const ClassPowers& cp, int a, int b) {
  const std::array<long, 3> e{a + b + 2L, b + 1L, 0L};
  const cd_t z1 = cp.zp[0][1], z2 = cp.zp[1][1], z3 = cp.zp[2][1];
  if (!cp.confluent) {
    std::array<std::array<cd_t, 3>, 3> num;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) num[i][j] = cp.zp[i][static_cast<std::size_t>(e[j])];
    const cd_t den = (z1 - z2) * (z1 - z3) * (z2 - z3);
    return det3(num) / den;
  }
  // z1 = z2 = u, z3 = w: differentiate the alternant in the first row.
  const cd_t u = z1, w = z3;
  std::array<std::array<cd_t, 3>, 3> num;
  for (int j = 0; j < 3; ++j) {
    num[0][j] = e[j] == 0 ? cd_t{0.0, 0.0}
                          : static_cast<double>(e[j]) * cp.zp[0][static_cast<std::size_t>(e[j] - 1)];
    num[1][j] = cp.zp[0][static_cast<std::size_t>(e[j])];
    num[2][j] = cp.zp[2][static_cast<std::size_t>(e[j])];
  }
  const cd_t den = (u - w) * (u - w);
  return det3(num) / den;
}

// t, u, u', v of the projective tables.
struct Sl3Trig {
  int p;
  long m1, m2, m3;
  explicit Sl3Trig(int p_) : p(p_) {
    m1 = static_cast<long>(p) * p + p + 1;
    m2 = static_cast<long>(p) * p - 1;
    m3 = p - 1;
  }
  static cd_t root(long k, long mod) {
    const long r = ((k % mod) + mod) % mod;
    const double ang = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(mod);
    return {std::cos(ang), std::sin(ang)};
  }
  cd_t t(long r) const { return root(r, m1) + root(r * p % m1, m1) + root(r * p % m1 * p, m1); }
  cd_t u(long j) const { return root(j, m2) + root(j * p, m2); }
  cd_t uprime(long j) const { return u(j) + root(-j * (p + 1), m2); }
  cd_t v(long l, long m) const { return root(l, m3) + root(m, m3) + root(-l - m, m3); }
};

// The s(a,b) table rows. `general` applies the two-term generic formula
// regardless of zero arguments (it doubles the single-index rows, which
// is what the projective table needs at the a+b >= p-2 boundary).
struct SFunction {
  const Sl3Classes& cls;
  Sl3Trig trig;

  SFunction(const Sl3Classes& c, int p) : cls(c), trig(p) {}

  cd_t table(int a, int b, const Sl3Classes::Entry& e) const {
    if (a == 0 && b == 0) return 1.0;
    if (b == 0) return single(a, e);
    if (a == 0) return std::conj(single(b, e));
    return general(a, b, e);
  }

  cd_t single(int a, const Sl3Classes::Entry& e) const {
    switch (e.kind) {
      case Sl3Classes::kOne: return 3.0;
      case Sl3Classes::kX: return trig.t(static_cast<long>(a) * e.i);
      case Sl3Classes::kY: return trig.uprime(static_cast<long>(a) * e.i);
      case Sl3Classes::kZDiag: return trig.v(static_cast<long>(a) * e.i, static_cast<long>(a) * e.i);
      case Sl3Classes::kZReg: return trig.v(static_cast<long>(a) * e.i, static_cast<long>(a) * e.j);
    }
    return 0.0;
  }

  cd_t general(int a, int b, const Sl3Classes::Entry& e) const {
    const long p = trig.p;
    switch (e.kind) {
      case Sl3Classes::kOne: return 6.0;
      case Sl3Classes::kX: {
        const long r = e.i;
        return trig.t(r * (a - b * p)) + trig.t(r * (a * p - b));
      }
      case Sl3Classes::kY: {
        const long s = e.i;
        return trig.u(s * (a + b + b * p)) + trig.u(s * (a - b * p)) +
               trig.u(s * (-a * (1 + p) - b));
      }
      case Sl3Classes::kZDiag: {
        const long k = e.i;
        return 2.0 * trig.v(k * (a + 2L * b), k * (a - static_cast<long>(b)));
      }
      case Sl3Classes::kZReg: {
        // Weyl-orbit sum of the weight (a,b): the six exponents u*a - v*b
        // over ordered pairs from the eigenvalue triple split into two
        // cyclic orbits, each a v-sum.
        const long l = e.i, m = e.j;
        return trig.v(l * (a + static_cast<long>(b)) + m * b,
                      -l * static_cast<long>(b) + m * a) +
               trig.v(l * static_cast<long>(b) + m * (a + static_cast<long>(b)),
                      l * static_cast<long>(a) - m * b);
      }
    }
    return 0.0;
  }
};

cd_t steinberg_value(int p, const Sl3Classes::Entry& e) {
  switch (e.kind) {
    case Sl3Classes::kOne: return static_cast<double>(p) * p * p;
    case Sl3Classes::kX: return 1.0;
    case Sl3Classes::kY: return -1.0;
    case Sl3Classes::kZDiag: return static_cast<double>(p);
    case Sl3Classes::kZReg: return 1.0;
  }
  return 0.0;
}

// Multiplier of the Steinberg character in the projective cover of (a,b).
cd_t proj_multiplier(const SFunction& s, int p, int a, int b, const Sl3Classes::Entry& e) {
  if (a == p - 1 && b == p - 1) return 1.0;
  if (a == p - 1 && b == 0) return s.table(p - 1, 0, e) - s.table(0, 0, e);
  if (a == 0 && b == p - 1) return s.table(0, p - 1, e) - s.table(0, 0, e);
  if (a == p - 2 && b == 0) return s.table(p - 1, 1, e) - s.table(0, 1, e);
  if (a == 0 && b == p - 2) return s.table(1, p - 1, e) - s.table(1, 0, e);
  if (a == 0 && b == 0)
    return s.table(p - 1, p - 1, e) + s.table(1, 1, e) + s.table(0, 0, e) -
           s.table(p - 1, 0, e) - s.table(0, p - 1, e);
  if (b == 0) return s.table(p - 1, p - a - 1, e) + s.table(a + 1, 1, e) - s.table(0, p - a - 1, e);
  if (a == 0) return s.table(p - b - 1, p - 1, e) + s.table(1, b + 1, e) - s.table(p - b - 1, 0, e);
  if (a + b >= p - 2) return s.table(p - b - 1, p - a - 1, e);
  return s.table(p - b - 1, p - a - 1, e) + s.table(a + 1, b + 1, e);
}

long proj_dim_sl3(int p, int a, int b) {
  const long p3 = static_cast<long>(p) * p * p;
  if (a == p - 1 && b == p - 1) return p3;
  if ((a == p - 1 && b == 0) || (a == 0 && b == p - 1)) return 2 * p3;
  if ((a == p - 2 && b == 0) || (a == 0 && b == p - 2)) return 3 * p3;
  if (a == 0 && b == 0) return 7 * p3;
  if (a == 0 || b == 0) return 9 * p3;
  if (a == p - 1 || b == p - 1) return 3 * p3;
  if (a + b >= p - 2) return 6 * p3;
  return 12 * p3;
}

// Composition factors of (a,b) (x) (1,0).
Decomp sl3_decomp(int p, int a, int b) {
  auto id = [&](int x, int y) { return x * p + y; };
  std::vector<std::pair<int, long>> raw;
  if (a == p - 1 && b == p - 1) {
    raw = {{id(p - 1, p - 2), 3}, {id(p - 2, 1), 2}, {id(1, p - 1), 1},
           {id(p - 3, 0), 4},     {id(0, p - 2), 1}};
  } else if (a == p - 1 && b == p - 2) {
    raw = {{id(p - 2, p - 1), 2}, {id(0, p - 3), 2}, {id(p - 1, p - 3), 1}, {id(1, p - 2), 1}};
  } else if (a == p - 1 && b == 0) {
    raw = {{id(p - 2, 1), 2}, {id(p - 3, 0), 1}, {id(1, 0), 1}};
  } else if (a == p - 1) {
    raw = {{id(p - 2, b + 1), 2},
           {id(p - 1, b - 1), 1},
           {id(p - 3 - b, 0), 1},
           {id(1, b), 1},
           {id(0, b - 1), 1}};
  } else if (b == p - 1 && a == 0) {
    raw = {{id(1, p - 1), 1}, {id(0, p - 2), 1}};
  } else if (b == p - 1 && a == 1) {
    raw = {{id(1, p - 2), 2}, {id(2, p - 1), 1}, {id(0, p - 3), 1}, {id(0, 1), 1}};
  } else if (b == p - 1) {
    raw = {{id(a, p - 2), 2},
           {id(a + 1, p - 1), 1},
           {id(a - 1, 1), 1},
           {id(a - 2, 0), 1},
           {id(0, p - a - 2), 1}};
  } else if (b == 0) {
    if (a == 0)
      raw = {{id(1, 0), 1}};
    else
      raw = {{id(a - 1, 1), 1}, {id(a + 1, 0), 1}};
  } else if (a == 0) {
    if (b == p - 2)
      raw = {{id(1, p - 2), 1}, {id(0, p - 3), 2}};
    else
      raw = {{id(1, b), 1}, {id(0, b - 1), 1}};
  } else if (a + b <= p - 3) {
    raw = {{id(a - 1, b + 1), 1}, {id(a + 1, b), 1}, {id(a, b - 1), 1}};
  } else if (a + b == p - 2) {
    raw = {{id(a - 1, b + 1), 1}, {id(a + 1, b), 1}, {id(a, b - 1), 2}};
  } else if (a + b == p - 1) {
    // the (a, b-1) factor carries zero multiplicity exactly on this line
    raw = {{id(a - 1, b + 1), 1}, {id(a + 1, b), 1}};
  } else {
    raw = {{id(a - 1, b + 1), 1}, {id(a + 1, b), 1}, {id(a, b - 1), 1}};
  }
  return merge_decomp(std::move(raw));
}

}  // namespace

CharacterData chars_sl3p(int p) {
  validate_p(p);
  Sl3Classes cls(p);
  const int nstates = p * p;
  const int nclasses = cls.count();
  CharacterData cd;
  cd.group_order = cls.order;
  cd.class_ids = cls.ids;
  cd.centralizer_orders = cls.cents;
  cd.class_sizes.resize(nclasses);
  for (int c = 0; c < nclasses; ++c) cd.class_sizes[c] = cls.order / cls.cents[c];
  cd.irr_values.setZero(nstates, nclasses);
  cd.proj_values.setZero(nstates, nclasses);

  SFunction sfun(cls, p);
  const int max_exp = 2 * p;

  for (int c = 0; c < nclasses; ++c) {
    const auto& entry = cls.entries[c];
    if (entry.kind == Sl3Classes::kOne) {
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          cd.irr_values(a * p + b, c) = static_cast<double>(dim_sl3(p, a, b));
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          cd.proj_values(a * p + b, c) = static_cast<double>(proj_dim_sl3(p, a, b));
      continue;
    }
    ClassPowers cp(cls, entry, max_exp);
    // Weyl characters for every highest weight in the square.
    Eigen::MatrixXcd weyl(p, p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) weyl(a, b) = weyl_value(cp, a, b);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        cd_t val = weyl(a, b);
        if (a + b >= p - 1 && a <= p - 2 && b <= p - 2) val -= weyl(p - b - 2, p - a - 2);
        cd.irr_values(a * p + b, c) = val;
      }
    const cd_t st = steinberg_value(p, entry);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        cd.proj_values(a * p + b, c) = proj_multiplier(sfun, p, a, b, entry) * st;
  }
  return cd;
}

ChainSpec make_sl3p(int p, const std::string& choice) {
  validate_p(p);
  if (choice != "natural") throw parameter_error("sl3p supports only the natural tensor choice");
  ChainSpec spec;
  spec.family = {Family::SL3p, p};
  spec.tensor_choice = choice;
  Sl3Classes cls(p);
  spec.group_order = cls.order;
  spec.trivial_state = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      spec.states.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
      spec.dims.push_back(dim_sl3(p, a, b));
      spec.proj_dims.push_back(proj_dim_sl3(p, a, b));
    }

  TensorComponent comp;
  comp.name = "natural";
  comp.alpha_dim = 3;
  comp.alpha_state = p;  // state (1,0)
  comp.alpha_values.resize(cls.count());
  Sl3Trig trig(p);
  for (int c = 0; c < cls.count(); ++c) {
    const auto& e = cls.entries[c];
    switch (e.kind) {
      case Sl3Classes::kOne: comp.alpha_values[c] = 3.0; break;
      case Sl3Classes::kX: comp.alpha_values[c] = trig.t(e.i); break;
      case Sl3Classes::kY: comp.alpha_values[c] = trig.uprime(e.i); break;
      case Sl3Classes::kZDiag: comp.alpha_values[c] = trig.v(e.i, e.i); break;
      case Sl3Classes::kZReg: comp.alpha_values[c] = trig.v(e.i, e.j); break;
    }
  }
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) comp.decomp.push_back(sl3_decomp(p, a, b));
  spec.components.push_back(std::move(comp));
  return spec;
}

}  // namespace tensorwalk::detail
