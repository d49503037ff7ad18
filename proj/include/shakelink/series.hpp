#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "shakelink/groupword.hpp"

namespace shakelink {

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Absolute ceiling on truncation degree. Monomial keys pack one variable id
// per byte of a uint64, so degree 8 is a hard representation limit.
inline constexpr int kMaxDegree = 8;

// A monomial in noncommuting variables X_1, X_2, ...: the sequence of
// variable ids, first factor first. Packed keys keep the maps cheap.
using Monomial = std::vector<int>;

std::uint64_t pack_monomial(const Monomial& m);
Monomial unpack_monomial(std::uint64_t key);
int monomial_degree(std::uint64_t key);

// Integer power series in noncommuting variables, truncated above `degree`.
// Coefficients are exact 64-bit integers; overflow throws.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree);

  static TruncatedSeries one(int degree);
  // 1 + X_g for exp=+1, the truncated inverse 1 - X_g + X_g^2 - ... for -1.
  static TruncatedSeries generator(int g, int exp, int degree);

  int degree() const { return degree_; }
  long long coefficient(const Monomial& m) const;
  long long constant_term() const;

  TruncatedSeries& add(const TruncatedSeries& rhs, long long scale = 1);
  TruncatedSeries multiplied(const TruncatedSeries& rhs) const;
  // In-place product with (1 + X_g) or its inverse; the workhorse for words.
  void mul_generator(int g, int exp);

  bool operator==(const TruncatedSeries& rhs) const;

  // Deterministic (degree, then packed key) iteration order.
  const std::map<std::uint64_t, long long>& terms() const { return terms_; }

 private:
  void add_term(std::uint64_t key, long long value);

  int degree_;
  std::map<std::uint64_t, long long> terms_;
};

// Magnus expansion of a word in free-group generators: x_g maps to 1 + X_g.
TruncatedSeries magnus_expand(const GroupWord& w, int degree);

// Multiplicative inverse of a series with constant term one.
TruncatedSeries inverse_of(const TruncatedSeries& s);

}  // namespace shakelink
