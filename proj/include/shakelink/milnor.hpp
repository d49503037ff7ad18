#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shakelink/diagram.hpp"
#include "shakelink/series.hpp"
#include "shakelink/wirtinger.hpp"

namespace shakelink {

struct MuResult {
  long long value = 0;
  long long delta = 0;
  long long mubar = 0;  // value reduced into [0, delta), or value when delta is 0
  int q = 0;
};

// Requested degrees are capped by the SHAKELINK_MAX_DEGREE environment
// variable (hard ceiling 8).
int max_degree_cap();

// Computes mu invariants of a link diagram by expanding arc meridians into
// truncated series over the component meridians, then reading longitude
// coefficients. All arithmetic is exact; SeriesError reports overflow.
class MilnorCalculator {
 public:
  MilnorCalculator(const LinkDiagram& d, int degree,
                   BaseArcPolicy policy = BaseArcPolicy::lowest_arc);

  int degree() const { return degree_; }

  // Coefficient of X_i1..X_i(l-1) in the reduced longitude of component il.
  // Index entries are 1 based and the index needs at least two of them.
  long long mu(const std::vector<int>& index);
  // gcd of mu over cyclic rotations of proper subsequences, at least two
  // entries each; zero when there are none.
  long long delta(const std::vector<int>& index);
  MuResult evaluate(const std::vector<int>& index);

 private:
  void check_index(const std::vector<int>& index) const;
  const TruncatedSeries& longitude(int comp);

  LinkDiagram d_;
  int degree_;
  std::vector<std::vector<StrandStep>> walks_;
  std::map<Arc, TruncatedSeries> arc_series_;
  std::map<int, TruncatedSeries> longitudes_;
};

struct FirstNonVanishing {
  int length = 0;  // 0 when everything vanishes up to the cap
  // index -> reduced value, lexicographic, nonzero entries only
  std::vector<std::pair<std::vector<int>, long long>> values;

  bool operator==(const FirstNonVanishing& rhs) const {
    return length == rhs.length && values == rhs.values;
  }
};

// Scans lengths 2..max_length and reports every nonzero reduced value at the
// first length where one appears.
FirstNonVanishing first_nonvanishing(const LinkDiagram& d, int max_length,
                                     BaseArcPolicy policy = BaseArcPolicy::lowest_arc);

// "123" <-> {1,2,3}; digits 1..9 only.
std::vector<int> parse_index(const std::string& digits);
std::string index_digits(const std::vector<int>& index);

std::string mu_line(const std::string& digits, const MuResult& r);

}  // namespace shakelink
