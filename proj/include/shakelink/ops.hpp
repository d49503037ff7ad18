#pragma once

#include <map>
#include <utility>
#include <vector>

#include "shakelink/diagram.hpp"

namespace shakelink {

// ---- basic surgery ---------------------------------------------------------

// Joins top position i to bottom position i for every strand.
LinkDiagram closure(const StringLinkDiagram& s);

// Cuts the smallest arc of a one component diagram into an open strand.
StringLinkDiagram open_knot(const LinkDiagram& knot);

// Disjoint union, b placed after a in component order.
LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b);

// Stacks `upper` on top of `lower`; strand counts and flow directions must
// match position by position.
StringLinkDiagram compose(const StringLinkDiagram& lower, const StringLinkDiagram& upper);

// Places `right` next to `left` with no interaction; strands of `right`
// take the positions after those of `left`.
StringLinkDiagram side_by_side(const StringLinkDiagram& left, const StringLinkDiagram& right);

// Swaps over and under strands everywhere.
LinkDiagram mirror(const LinkDiagram& d);

// Reverses the orientation of one component.
LinkDiagram reverse_component(const LinkDiagram& d, int comp);

// Keeps the listed components, in the listed order.
LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& comps);

// order[k] names the old component placed at position k.
LinkDiagram permute_components(const LinkDiagram& d, const std::vector<int>& order);

// Adds a small circle around arc `around` as a new last component linking
// its component once with the given sign.
LinkDiagram add_meridian(const LinkDiagram& d, Arc around, int sign);

// Half the signed count of crossings between components i and j.
int linking_number(const LinkDiagram& d, int i, int j);

// ---- cabling ---------------------------------------------------------------

// Orientations of the parallel copies replacing one component: +1 keeps the
// original direction, -1 reverses it. Copy 1 is the leftmost copy facing
// along the original flow.
struct CopyPattern {
  std::vector<int> signs;
};

struct CableResult {
  LinkDiagram diagram;
  // copy_component[i][t-1]: component index holding copy t of old component i.
  std::vector<std::vector<int>> copy_component;
  // (original arc, copy number) -> arc at the start of that copy's segment.
  std::map<std::pair<Arc, int>, Arc> copy_arc;
};

// Replaces every component i by parallel copies following patterns[i], with
// full_twists[i] full twists added to the bundle. Components with a single
// forward copy and no twists keep their arcs unchanged.
CableResult cable_all(const LinkDiagram& d, const std::vector<CopyPattern>& patterns,
                      const std::vector<int>& full_twists);

CableResult cable_component(const LinkDiagram& d, int comp, const CopyPattern& pattern,
                            int full_twists);

// Patterned copies with every bundle framed to r: component i receives
// r minus its self writhe full twists.
CableResult r_shaking(const LinkDiagram& d, const std::vector<CopyPattern>& patterns, int r);

struct StringCableResult {
  StringLinkDiagram diagram;
  std::vector<std::vector<int>> copy_strand;
  std::map<std::pair<Arc, int>, Arc> copy_arc;
};

// String link version; copies of strand i sit at consecutive boundary
// positions in copy order. full_twists defaults to none.
StringCableResult cable_string_link(const StringLinkDiagram& s,
                                    const std::vector<CopyPattern>& patterns,
                                    const std::vector<int>& full_twists = {});

// ---- band sums -------------------------------------------------------------

enum class Side { left, right };

struct RouteEntry {
  Arc arc = 0;
  bool over = true;  // the band passes over `arc` (under it when false)
  int sign = 1;      // sign of the crossing made by the leading band edge
};

struct BandSpec {
  Arc end1 = 0;
  Side side1 = Side::right;
  Arc end2 = 0;
  Side side2 = Side::right;
  int half_twists = 0;
  std::vector<RouteEntry> route;
};

// Fuses the two distinct components meeting end1 and end2 along an embedded
// band; the fused component takes the smaller of the two positions. The
// attachment must be orientation coherent: equal sides with an even twist
// count, or opposite sides with an odd one.
LinkDiagram band_sum(const LinkDiagram& d, const BandSpec& band);

// ---- infection -------------------------------------------------------------

struct Passage {
  Arc arc = 0;
  int sign = 1;
};

// One subdisk per component; each subdisk lists the strand passages through
// it in order across its width. framings gives full twists applied to each
// passage bundle (empty means none).
struct MultidiskSpec {
  std::vector<std::vector<Passage>> subdisks;
  std::vector<int> framings;
};

// Subdisk j meets component i with algebraic count 1 when i == j, else 0.
bool respects(const LinkDiagram& d, const MultidiskSpec& e);
// Additionally subdisk j meets no other component at all.
bool strongly_respects(const LinkDiagram& d, const MultidiskSpec& e);

struct InfectResult {
  LinkDiagram diagram;
  bool respects_warning = false;  // set when the multidisk does not respect d
};

// Reroutes the strands passing through each subdisk j through parallel
// copies of strand j of the pattern string link.
InfectResult infect(const LinkDiagram& d, const MultidiskSpec& e, const StringLinkDiagram& pattern);

}  // namespace shakelink
