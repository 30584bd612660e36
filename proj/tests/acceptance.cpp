// Acceptance gate: one line per criterion, exit 0 only if every suite passes.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "plg/verify.hpp"

namespace {

std::uint64_t env_seed() {
  const char* s = std::getenv("PLGROUPS_SEED");
  if (!s || !*s) return 1;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  return (end && *end == '\0') ? v : 1;
}

}  // namespace

int main() {
  const std::uint64_t seed = env_seed();
  const std::pair<std::string, std::string> criteria[] = {
      {"prop33", "orbit and support data"},
      {"lemma43", "prescribed-support synthesis"},
      {"wreath", "wreath embedding"},
      {"arith", "arithmetic interpretation"},
      {"prop81", "two-commutator reduction"},
      {"algebra", "group laws and support identities"},
      {"classify", "continuity classifier"},
      {"serialize", "serialization round-trip"},
  };
  bool all_ok = true;
  int num = 0;
  for (const auto& [suite, label] : criteria) {
    ++num;
    std::vector<plg::Check> checks;
    std::string error;
    try {
      checks = plg::run_suite(suite, seed);
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = error.empty();
    for (const plg::Check& c : checks) ok = ok && c.ok;
    std::cout << "criterion " << num << " (" << label << "): " << (ok ? "PASS" : "FAIL")
              << "\n";
    if (!error.empty()) std::cout << "  error: " << error << "\n";
    for (const plg::Check& c : checks)
      if (!c.ok) std::cout << "  failed: " << c.name << " (" << c.detail << ")\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
