#pragma once

#include <stdexcept>
#include <string>

namespace tensorwalk {

// Invalid family parameters or CLI arguments. Exit code 1 in the CLI.
struct parameter_error : std::invalid_argument {
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Unknown state or class looked up on a valid spec.
struct lookup_error : std::out_of_range {
  explicit lookup_error(const std::string& what) : std::out_of_range(what) {}
};

// An exact computation was refused because it exceeds the configured budget.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed (broken table, non-stochastic row,
// stationarity mismatch). Exit code 2 in the CLI.
struct consistency_error : std::logic_error {
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tensorwalk
