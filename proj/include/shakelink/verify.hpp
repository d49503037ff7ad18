#pragma once

#include <string>
#include <vector>

namespace shakelink {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> lines;

  bool ok() const { return failures == 0; }
};

// Magnus expansion laws on seeded random words, plus truncation stability of
// mu on the named fixtures.
SuiteResult verify_magnus(unsigned long long seed);

// mu(ij) against the crossing-sign linking oracle on every named fixture and
// on seeded random band, cable, and meridian products.
SuiteResult verify_oracle(unsigned long long seed);

// Infection additivity instances, deterministic and seeded, each checked
// twice: directly and through the cabled-closure sum.
SuiteResult verify_additivity_suite(unsigned long long seed);

// Recipe-generated endpoint pairs: crossing changes, strong shakes of the
// Hopf link, and infection-versus-closure comparisons.
SuiteResult verify_pairs(unsigned long long seed);

std::vector<SuiteResult> verify_all(unsigned long long seed);

}  // namespace shakelink
