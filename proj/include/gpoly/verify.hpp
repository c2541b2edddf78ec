#pragma once

// Cross-method property checks, shipped in the CLI as `verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "gpoly/schubert.hpp"

namespace gpoly {

struct VerifyOptions {
  int max_n = 8;
  // 0 = every Schubert matroid up to max_n; otherwise a seeded sample.
  int samples = 0;
  std::uint64_t seed = 1;
  // Rules used by the Delannoy side of every check. Weakening them is how
  // the suite's sensitivity is tested.
  DelannoyRules rules{};
  bool include_catalog = true;
};

struct PropertyResult {
  std::string name;
  long instances = 0;
  bool passed = true;
  // First failing instance, empty when passed.
  std::string counterexample;
};

// Every Schubert matroid S(n, U) with 1 <= n <= max_n, U nonempty, in order
// of n then U (as a bitmask).
std::vector<SchubertMatroid> all_schubert_matroids(int max_n);

std::vector<PropertyResult> run_verification(const VerifyOptions& options);

}  // namespace gpoly
