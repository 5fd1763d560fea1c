#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "tensorwalk/chain.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/family.hpp"
#include "tensorwalk/quantum.hpp"
#include "tensorwalk/simulate.hpp"
#include "tensorwalk/spectral.hpp"
#include "tensorwalk/verify.hpp"

namespace {

using namespace tensorwalk;

constexpr const char* kVersion = "tensorwalk 1.0.0 (schema 1)";

struct CommonArgs {
  std::string family;
  int p = 0;
  int n = 0;
  std::string tensor;
  std::string lazy_hold;  // rational string; empty = family default
  std::string format = "csv";
  std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_tensor = true) {
  cmd->add_option("--family", args.family, "bdn | sl2p | sl2p2 | sl22n | sl3p | quantum")
      ->required();
  cmd->add_option("--p", args.p, "prime parameter for sl2p, sl2p2, sl3p");
  cmd->add_option("--n", args.n, "integer parameter for bdn, sl22n, quantum");
  if (with_tensor) {
    cmd->add_option("--tensor", args.tensor, "tensoring module (family dependent)");
    cmd->add_option("--lazy", args.lazy_hold,
                    "holding probability as a rational, e.g. 1/2 (default: family specific)");
  }
  cmd->add_option("--format", args.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", args.output, "write to file instead of stdout");
}

FamilyId family_id(const CommonArgs& args) {
  Family tag = family_from_name(args.family);
  const bool prime_family =
      tag == Family::SL2p || tag == Family::SL2pSquared || tag == Family::SL3p;
  const int param = prime_family ? args.p : args.n;
  if (param == 0)
    throw parameter_error(std::string("missing required parameter --") +
                          (prime_family ? "p" : "n") + " for family " + args.family);
  return {tag, param};
}

std::string tensor_or_default(const FamilyId& id, const CommonArgs& args) {
  return args.tensor.empty() ? tensor_choices(id.tag).front() : args.tensor;
}

Rational lazy_hold(const FamilyId& id, const std::string& tensor, const CommonArgs& args) {
  if (!args.lazy_hold.empty()) return rat_parse(args.lazy_hold);
  if (id.tag == Family::BDn) return rat(1, 2);
  if ((id.tag == Family::SL2p || id.tag == Family::SL2pSquared) && tensor == "natural")
    return rat(1, 2);
  return rat(0);
}

void emit(const CommonArgs& args, const std::string& text) {
  if (args.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw parameter_error("cannot open output file " + args.output);
    out << text;
  }
}

Kernel build_chain(const FamilyId& id, const std::string& tensor, const Rational& hold,
                   ChainSpec* spec_out = nullptr) {
  ChainSpec spec = make_spec(id, tensor);
  Kernel k = build_kernel(spec);
  if (hold != 0) k = lazy(k, hold);
  if (spec_out) *spec_out = spec;
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tensor-product Markov chains: kernels, spectra, convergence, simulation"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonArgs args;
  bool dump_spec = false;
  long steps = 0, lmax = 100, samples = 100000;
  std::uint64_t seed = 1;
  int start = -1;

  auto* kernel_cmd = app.add_subcommand("kernel", "emit the transition matrix as JSON");
  add_common(kernel_cmd, args);
  kernel_cmd->add_flag("--dump-spec", dump_spec, "emit the chain spec instead of the matrix");

  auto* stationary_cmd = app.add_subcommand("stationary", "emit the stationary distribution");
  add_common(stationary_cmd, args);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "emit eigenvalues and residuals as JSON");
  add_common(spectrum_cmd, args);

  auto* distance_cmd = app.add_subcommand("distance", "emit tv/linf distance series as CSV");
  add_common(distance_cmd, args);
  distance_cmd->add_option("--lmax", lmax, "largest step count");
  distance_cmd->add_option("--start", start, "start state index (default: trivial)");

  auto* simulate_cmd = app.add_subcommand("simulate", "sample trajectories, emit histogram CSV");
  add_common(simulate_cmd, args);
  simulate_cmd->add_option("--seed", seed, "PRNG seed");
  simulate_cmd->add_option("--samples", samples, "number of independent samples");
  simulate_cmd->add_option("--steps", steps, "steps per sample");
  simulate_cmd->add_option("--start", start, "start state index (default: trivial)");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  std::string verify_family = "all";
  int max_p = 23, max_n = 41;
  verify_cmd->add_option("--family", verify_family, "family filter or 'all'");
  verify_cmd->add_option("--max-p", max_p, "largest prime parameter");
  verify_cmd->add_option("--max-n", max_n, "largest integer parameter");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_cmd->parsed()) {
      VerifyOptions opt{verify_family, max_p, max_n};
      auto results = run_verification(opt);
      bool ok = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        ok = ok && r.pass;
      }
      std::cout << (ok ? "verification passed" : "verification FAILED") << "\n";
      return ok ? 0 : 2;
    }

    FamilyId id = family_id(args);
    const std::string tensor = tensor_or_default(id, args);
    const Rational hold = lazy_hold(id, tensor, args);

    if (kernel_cmd->parsed()) {
      ChainSpec spec;
      Kernel k = build_chain(id, tensor, hold, &spec);
      emit(args, dump_spec ? spec_to_json(spec) : kernel_to_json(k));
      return 0;
    }

    if (stationary_cmd->parsed()) {
      ChainSpec spec = make_spec(id, tensor);
      auto pi = stationary(spec);
      if (args.format == "json") {
        std::string text = "{\n  \"states\": [";
        for (std::size_t i = 0; i < spec.states.size(); ++i)
          text += (i ? ", " : "") + ("\"" + spec.states[i] + "\"");
        text += "],\n  \"stationary\": [";
        for (std::size_t i = 0; i < pi.size(); ++i)
          text += (i ? ", " : "") + ("\"" + rat_str(pi[i]) + "\"");
        text += "]\n}";
        emit(args, text);
      } else {
        std::string text = "state,pi\n";
        for (std::size_t i = 0; i < pi.size(); ++i)
          text += spec.states[i] + "," + rat_str(pi[i]) + "\n";
        emit(args, text);
      }
      return 0;
    }

    if (spectrum_cmd->parsed()) {
      if (id.tag == Family::QuantumSL2) {
        emit(args, quantum_spectrum_to_json(id.param));
        return 0;
      }
      ChainSpec spec;
      Kernel k = build_chain(id, tensor, hold, &spec);
      SpectralData sd = lazy_spectrum(brauer_spectrum(spec), hold);
      emit(args, spectrum_to_json(k, sd));
      return 0;
    }

    if (distance_cmd->parsed()) {
      ChainSpec spec;
      Kernel k = build_chain(id, tensor, hold, &spec);
      const int s = start < 0 ? spec.trivial_state : start;
      emit(args, distance_csv(distance_series(k, s, lmax)));
      return 0;
    }

    if (simulate_cmd->parsed()) {
      ChainSpec spec;
      Kernel k = build_chain(id, tensor, hold, &spec);
      SimConfig cfg;
      cfg.seed = seed;
      cfg.num_samples = samples;
      cfg.steps = steps;
      cfg.start = start < 0 ? spec.trivial_state : start;
      emit(args, empirical_csv(k, empirical_counts(k, cfg)));
      return 0;
    }
  } catch (const parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lookup_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
