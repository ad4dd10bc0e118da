#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "serialize.hpp"
#include "yfuse/sampling.hpp"

namespace yfuse::cli {

/// Size limits for the verification suites.
struct SuiteBounds {
  std::string name = "default";
  int max_group_order = 5;       // l for the group-algebra checks
  int max_rank_cells = 4;        // n for the rank oracle
  int max_rank_outer = 7;        // |lambda| for skew shapes in the rank oracle
  int max_N = 3;                 // largest N for tensor checks
  int max_mixed_factors = 4;     // n + ntilde for the exchange and symmetrizer checks
  int max_module_factors = 3;    // n + ntilde for the intertwiner and RTT checks
  int max_fact_size = 5;         // |lambda| for the g-series factorization
};

SuiteBounds default_bounds();
SuiteBounds tiny_bounds();
/// "default" or "tiny"; throws InvalidInput otherwise.
SuiteBounds bounds_named(const std::string& name);

/// One acceptance criterion evaluated over its instance family.
struct CheckResult {
  int criterion = 0;
  std::string name;
  long cases = 0;
  bool pass = false;
  double seconds = 0;  // wall time; never serialized, so output stays deterministic
};

/// The suites: "fusion", "tensor", "yangian", or "all" (throws InvalidInput otherwise).
std::vector<CheckResult> run_suite(const std::string& name, const SuiteBounds& bounds,
                                   std::uint64_t seed = kDefaultSeed);

Json suite_json(const std::string& name, const SuiteBounds& bounds, std::uint64_t seed,
                const std::vector<CheckResult>& results);

}  // namespace yfuse::cli
