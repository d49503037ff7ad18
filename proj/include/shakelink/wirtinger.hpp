#pragma once

#include <vector>

#include "shakelink/diagram.hpp"

namespace shakelink {

// Which arc of each component anchors its meridian generator.
enum class BaseArcPolicy { lowest_arc, highest_arc };

// out = over^e in over^-e with e the crossing sign.
struct WirtingerRelation {
  Arc out = 0;
  Arc in = 0;
  Arc over = 0;
  int exponent = 1;
};

// One generator per arc and one conjugation relation per crossing; an arc
// passing over a crossing continues as the next label without a relation of
// its own, which the strand walks below record.
struct WirtingerPresentation {
  std::vector<Arc> generators;              // every arc, ascending
  std::vector<WirtingerRelation> relations; // one per crossing, diagram order
  std::vector<Arc> base;                    // chosen meridian arc per component
};

WirtingerPresentation wirtinger(const LinkDiagram& d,
                                BaseArcPolicy policy = BaseArcPolicy::lowest_arc);

// One step of a trip around a component: the strand leaves `arc` through
// crossing index `crossing`, passing under when `under` is set.
struct StrandStep {
  Arc arc = 0;
  int crossing = 0;
  bool under = false;
};

// A full walk around every component starting from its base arc; components
// without crossings walk zero steps.
std::vector<std::vector<StrandStep>> component_walks(const LinkDiagram& d,
                                                     const std::vector<Arc>& base);

}  // namespace shakelink
