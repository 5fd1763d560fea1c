#pragma once

#include <string>
#include <vector>

namespace tensorwalk {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::string family = "all";
  int max_p = 23;
  int max_n = 41;
};

// Runs every module invariant over the default parameter matrix
// (restricted by the options): exact stationarity and row sums,
// dimension conservation, orthogonality, eigen-residuals and
// biorthogonality, McKay conjugacy, spectral-vs-power oracle agreement,
// quantum Jordan relations and Steinberg spectrum, distance monotonicity.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace tensorwalk
