#pragma once

#include <cstddef>
#include <vector>

namespace shakelink {

// One letter of a word in a free group: generator id with exponent +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;

  bool operator==(const Letter&) const = default;
};

using GroupWord = std::vector<Letter>;

// Cancels adjacent inverse pairs until none remain.
GroupWord free_reduce(const GroupWord& w);

// Concatenation with cancellation at the seam only; both inputs are assumed
// reduced, so the result is reduced too.
GroupWord concat_reduced(const GroupWord& a, const GroupWord& b);

GroupWord inverse(const GroupWord& w);

// w^e for e in {+1,-1}.
GroupWord power(const GroupWord& w, int e);

// u^e * w * u^-e, all inputs reduced.
GroupWord conjugate(const GroupWord& w, const GroupWord& u, int e);

// Sum of exponents of generator g in w.
long long exponent_sum(const GroupWord& w, int g);

}  // namespace shakelink
