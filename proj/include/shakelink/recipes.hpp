#pragma once

#include <string>
#include <vector>

#include "shakelink/diagram.hpp"
#include "shakelink/milnor.hpp"
#include "shakelink/ops.hpp"

namespace shakelink {

// Two links claimed equivalent up to the moves encoded in the shaking
// profiles, with the invariant comparison carried out on both endpoints.
struct ConcordancePairReport {
  LinkDiagram before;
  LinkDiagram after;
  std::vector<int> profile_before;
  std::vector<int> profile_after;
  // Pairwise linking numbers in (1,2), (1,3), ..., (m-1,m) order.
  std::vector<int> lk_before;
  std::vector<int> lk_after;
  FirstNonVanishing first_before;
  FirstNonVanishing first_after;
  bool linking_agrees = false;
  bool first_agrees = false;
  // The recipe's own cross check against an independently built diagram of
  // the same link, where one exists.
  bool matches_companion = true;

  bool verdict() const { return linking_agrees && first_agrees && matches_companion; }
};

std::vector<int> pairwise_linking(const LinkDiagram& d);

// Fills the lk and first non-vanishing fields from the endpoints, which must
// have the same number of components.
void compare_endpoints(ConcordancePairReport& r, int max_length = 4);

// `pair profile=1,3;1,1 verdict=pass`
std::string pair_line(const ConcordancePairReport& r);
// The pair line followed by lk and mu lines for both endpoints.
std::vector<std::string> report_lines(const ConcordancePairReport& r);

// Changes one crossing of the knot closure(k) by trading it through three
// parallel copies of a meridian: the two outer copies are banded into the
// knot, the middle one survives as the new meridian. Endpoints: the knot
// with its meridian before, the banded diagram after; the companion check
// compares the result with the crossing-changed knot plus meridian.
ConcordancePairReport crossing_change_recipe(const StringLinkDiagram& k, int crossing,
                                             int half_twists = 0);

// Ties the knot closure(k) into one component of the Hopf link by passing
// two oppositely oriented copies of that component through the pattern and
// banding all three copies back together. Companion check: the finger
// diagram fixture built from the same knot.
ConcordancePairReport strong_shake_hopf_recipe(const StringLinkDiagram& k);

// Infection endpoint comparison: host s infected along e versus the closure
// of the pattern. The passage-count shaking of the closure is built as a
// well-formedness witness for the profile.
ConcordancePairReport lemma41_recipe(const LinkDiagram& s, const StringLinkDiagram& j,
                                     const MultidiskSpec& e);

struct AdditivityReport {
  bool applicable = false;  // respecting multidisk and both inputs vanish below |I|
  bool pass = false;
  long long infected = 0;  // mu of the infected link at the index
  long long host = 0;
  long long pattern = 0;  // mu of the pattern closure
  bool infected_clean = false;  // shorter mu of the infected link all vanish
};

// Checks mu(infected) = mu(host) + mu(pattern closure) at the index, under
// the vanishing hypothesis on shorter indices.
AdditivityReport verify_additivity(const LinkDiagram& l, const StringLinkDiagram& j,
                                   const MultidiskSpec& e, const std::vector<int>& index);

struct CabledSumReport {
  bool applicable = false;
  bool pass = false;
  long long sum = 0;       // over cabled-closure indices collapsing to the index
  long long expected = 0;  // mu(infected) - mu(host)
  long long product = 1;   // signed passage-count identity
  int terms = 0;
};

// Recomputes the infection side of the additivity identity by cabling the
// pattern along the passage signs and summing mu over every index of the
// cabled closure that collapses onto the requested one.
CabledSumReport cabled_sum_check(const LinkDiagram& l, const StringLinkDiagram& j,
                                 const MultidiskSpec& e, const std::vector<int>& index);

}  // namespace shakelink
