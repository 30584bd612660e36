#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plg/plmap.hpp"
#include "plg/rng.hpp"

namespace plg {

struct Check {
  std::string name;
  bool ok;
  std::string detail;  // empty when ok
};

// Named verification suites; each is deterministic for a given seed and
// returns one Check per assertion group.
std::vector<Check> suite_prop33();
std::vector<Check> suite_lemma43(std::uint64_t seed);
std::vector<Check> suite_wreath(std::uint64_t seed);
std::vector<Check> suite_arith();
std::vector<Check> suite_prop81(std::uint64_t seed);
std::vector<Check> suite_partition(std::uint64_t seed);
std::vector<Check> suite_algebra(std::uint64_t seed);
std::vector<Check> suite_classify();
std::vector<Check> suite_serialize(std::uint64_t seed);

std::vector<std::string> suite_names();
std::vector<Check> run_suite(const std::string& name, std::uint64_t seed);

// Random element generators used by the suites and tests.
Rational random_grid_point(Rng& rng, const GroupParams& params);  // in A cap (0, r)
PLMap random_bump(Rng& rng, const GroupParams& params);           // interior support
PLMap random_f(Rng& rng, const GroupParams& params, int factors);
PLMap random_v(Rng& rng, const GroupParams& params);

}  // namespace plg
