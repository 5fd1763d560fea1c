#include "tensorwalk/verify.hpp"

#include <cmath>
#include <sstream>

#include "tensorwalk/chain.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/family.hpp"
#include "tensorwalk/quantum.hpp"
#include "tensorwalk/simulate.hpp"
#include "tensorwalk/spectral.hpp"

namespace tensorwalk {

namespace {

struct Runner {
  std::vector<CheckResult> results;

  template <typename F>
  void check(const std::string& name, F&& fn) {
    CheckResult r;
    r.name = name;
    try {
      std::string detail = fn();
      r.pass = true;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void verify_instance(Runner& run, FamilyId id, const std::string& tensor) {
  const std::string prefix = family_name(id.tag) + "/" + std::to_string(id.param) + "/" + tensor;

  ChainSpec spec;
  Kernel kernel;
  bool built = false;
  run.check(prefix + " kernel: exact rows and stationarity", [&] {
    spec = make_spec(id, tensor);
    kernel = build_kernel(spec);
    built = true;
    return std::string();
  });
  if (!built) return;

  if (id.tag == Family::QuantumSL2) {
    if (tensor == "v1") {
      run.check(prefix + " jordan relations", [&] {
        auto rows = quantum_pairing_report(id.param);
        double worst = 0.0;
        for (auto& r : rows) {
          worst = std::max(worst, r.residual_max);
          if (r.d_direct == 0.0) throw consistency_error("pairing constant vanishes");
        }
        if (worst > 1e-10) throw consistency_error("jordan residual " + fmt(worst));
        return "max residual " + fmt(worst);
      });
      run.check(prefix + " jordan row vs exact power", [&] {
        const long horizon = 2L * id.param * id.param;
        double worst = 0.0;
        PowerBudget budget{512, horizon + 1};
        for (long steps : {0L, 1L, 2L, 7L, horizon / 4, horizon}) {
          auto exact = power_row_exact(kernel, 0, steps, budget);
          auto jrow = jordan_power_row(id.param, steps);
          for (int y = 0; y < kernel.size(); ++y)
            worst = std::max(worst, std::abs(jrow[y] - rat_d(exact[y])));
        }
        if (worst > 1e-8) throw consistency_error("reconstruction error " + fmt(worst));
        return "max error " + fmt(worst);
      });
    } else {
      run.check(prefix + " steinberg spectrum exact", [&] {
        auto rep = steinberg_spectrum(id.param);
        if (!rep.all()) throw consistency_error("a steinberg relation failed");
        return std::string();
      });
    }
    run.check(prefix + " mckay conjugacy", [&] {
      auto res = mckay_conjugacy_residual(kernel, mckay_matrix(spec), spec.alpha_dim());
      if (res != 0) throw consistency_error("nonzero residual " + rat_str(res));
      return std::string();
    });
    return;
  }

  run.check(prefix + " spectrum residuals", [&] {
    SpectralData sd = brauer_spectrum(spec);
    auto res = eigen_residuals(kernel, sd);
    if (res.right > 1e-9 || res.left > 1e-9)
      throw consistency_error("eigen residuals " + fmt(res.right) + "/" + fmt(res.left));
    const double bio = biorthogonality_residual(sd);
    if (bio > 1e-8) throw consistency_error("biorthogonality residual " + fmt(bio));
    double spectral_err = 0.0;
    for (long steps : {0L, 1L, 3L, 8L, 21L, 64L}) {
      auto srow = spectral_row(sd, spec.trivial_state, steps);
      auto prow = power_row(kernel, spec.trivial_state, steps);
      for (int y = 0; y < kernel.size(); ++y)
        spectral_err = std::max(spectral_err, std::abs(srow[y] - prow[y]));
    }
    if (spectral_err > 1e-8)
      throw consistency_error("spectral row error " + fmt(spectral_err));
    return "eigen " + fmt(std::max(res.right, res.left)) + ", biorth " + fmt(bio) +
           ", row " + fmt(spectral_err);
  });

  if (!spec.is_mixture())
    run.check(prefix + " mckay conjugacy", [&] {
      auto res = mckay_conjugacy_residual(kernel, mckay_matrix(spec), spec.alpha_dim());
      if (res != 0) throw consistency_error("nonzero residual " + rat_str(res));
      return std::string();
    });
}

void verify_family_chars(Runner& run, FamilyId id) {
  run.check(family_name(id.tag) + "/" + std::to_string(id.param) + " orthogonality", [&] {
    ChainSpec spec = make_spec(id);
    auto res = orthogonality_residuals(character_data(spec));
    if (res.row > 1e-8 || res.column > 1e-8)
      throw consistency_error("orthogonality residuals " + fmt(res.row) + "/" + fmt(res.column));
    return "row " + fmt(res.row) + ", column " + fmt(res.column);
  });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  Runner run;
  const bool all = opt.family == "all";

  if (all || opt.family == "sl2p")
    for (int p : {5, 7, 11, 13, 23}) {
      if (p > opt.max_p) continue;
      verify_family_chars(run, {Family::SL2p, p});
      for (const auto& tensor : {"natural", "steinberg", "sum", "mixed"})
        verify_instance(run, {Family::SL2p, p}, tensor);
    }

  if (all || opt.family == "sl2p2")
    for (int p : {5, 7, 11}) {
      if (p > opt.max_p) continue;
      verify_family_chars(run, {Family::SL2pSquared, p});
      for (const auto& tensor : {"natural", "oneone", "mixed"})
        verify_instance(run, {Family::SL2pSquared, p}, tensor);
    }

  if (all || opt.family == "sl22n")
    for (int n = 2; n <= std::min(10, opt.max_n); ++n) {
      verify_family_chars(run, {Family::SL2TwoN, n});
      verify_instance(run, {Family::SL2TwoN, n}, "v1");
      verify_instance(run, {Family::SL2TwoN, n}, "uniform");
    }

  if (all || opt.family == "sl3p")
    for (int p : {11, 17, 23}) {
      if (p > opt.max_p) continue;
      verify_family_chars(run, {Family::SL3p, p});
      verify_instance(run, {Family::SL3p, p}, "natural");
      run.check("sl3p/" + std::to_string(p) + " eigenvalue bound", [&] {
        auto rep = sl3_eigen_bound(p);
        if (!rep.ok) throw consistency_error("bound violated, margin " + fmt(rep.margin));
        return "margin " + fmt(rep.margin);
      });
    }

  if (all || opt.family == "quantum")
    for (int n = 3; n <= std::min(41, opt.max_n); n += 2) {
      verify_instance(run, {Family::QuantumSL2, n}, "v1");
      verify_instance(run, {Family::QuantumSL2, n}, "steinberg");
    }

  if (all || opt.family == "bdn")
    for (int n = 3; n <= std::min(20, opt.max_n); ++n) {
      verify_family_chars(run, {Family::BDn, n});
      verify_instance(run, {Family::BDn, n}, "chi1");
    }

  // Distance-series monotonicity spot checks (the series itself raises on
  // any violation).
  run.check("distance monotonicity spot checks", [&] {
    Kernel a = lazy(build_kernel(make_spec({Family::SL2p, std::min(11, opt.max_p)}, "natural")),
                    rat(1, 2));
    distance_series(a, 0, 300);
    Kernel b = build_kernel(make_spec({Family::QuantumSL2, 9}, "v1"));
    distance_series(b, 0, 300);
    return std::string();
  });

  run.check("simulation reproducibility and consistency", [&] {
    Kernel k = lazy(build_kernel(make_spec({Family::SL2p, std::min(11, opt.max_p)}, "natural")),
                    rat(1, 2));
    SimConfig cfg{424242ull, 20000, 0, 25};
    auto c1 = empirical_counts(k, cfg);
    if (c1 != empirical_counts(k, cfg))
      throw consistency_error("rerun with identical seed diverged");
    auto freq = empirical_row(k, cfg);
    auto exact = power_row(k, 0, cfg.steps);
    const double tv = tv_distance(freq, exact);
    if (tv > 0.04) throw consistency_error("empirical row drifted, tv " + fmt(tv));
    return "tv " + fmt(tv);
  });

  return run.results;
}

}  // namespace tensorwalk
