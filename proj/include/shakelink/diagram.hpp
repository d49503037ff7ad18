#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shakelink {

using Arc = int;

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An oriented crossing. The four arc labels sit in counterclockwise planar
// order in `cyclic`; under_in/over_in say which positions the two incoming
// ends occupy. The outgoing end of each strand is two positions further on.
// The stored sign is redundant given the geometry; validate() recomputes it.
struct Crossing {
  std::array<Arc, 4> cyclic{};
  int under_in = 0;
  int over_in = 1;
  int sign = 1;

  // Builds from the serialized tuple (incoming-under, outgoing-under,
  // incoming-over, outgoing-over) plus sign, reconstructing cyclic order.
  static Crossing from_tuple(Arc in_under, Arc out_under, Arc in_over, Arc out_over, int sign);

  Arc in_under() const { return cyclic[under_in]; }
  Arc out_under() const { return cyclic[(under_in + 2) % 4]; }
  Arc in_over() const { return cyclic[over_in]; }
  Arc out_over() const { return cyclic[(over_in + 2) % 4]; }

  // Sign determined by the strand directions within the cyclic order: the
  // crossing is positive when the over strand enters one position clockwise
  // of the incoming under end.
  int computed_sign() const { return over_in == (under_in + 3) % 4 ? 1 : -1; }

  bool operator==(const Crossing&) const = default;
};

struct ValidationIssue {
  std::string code;
  std::string detail;
};

// Result of following arcs through crossings.  For closed diagrams every
// path is a cycle; for string links the boundary arcs leave open chains.
struct Traversal {
  // Per component/strand, arcs in flow order.
  std::vector<std::vector<Arc>> paths;
  std::map<Arc, int> arc_path;
  std::vector<ValidationIssue> issues;
};

// A closed oriented link diagram.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Validates structure; throws DiagramError on any issue. Components are
  // ordered by smallest arc label.
  static LinkDiagram make(std::vector<Crossing> crossings, std::vector<Arc> lone_arcs,
                          int declared_m = -1);

  // Same, but the caller fixes component order by giving one representative
  // arc per component.
  static LinkDiagram make_ordered(std::vector<Crossing> crossings, std::vector<Arc> lone_arcs,
                                  const std::vector<Arc>& representatives);

  // No validation beyond best-effort tracing; for building known-bad values
  // that validate() is expected to report on.
  static LinkDiagram unchecked(std::vector<Crossing> crossings, std::vector<Arc> lone_arcs,
                               int declared_m = -1);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Arc>& lone_arcs() const { return lone_arcs_; }
  int declared_m() const { return declared_m_; }

  int m() const { return static_cast<int>(components_.size()); }
  // Component arc cycles in flow order, each rotated to start at its
  // smallest arc. Component indices are 0-based internally.
  const std::vector<std::vector<Arc>>& components() const { return components_; }
  int component_of(Arc a) const;
  bool has_arc(Arc a) const { return arc_component_.count(a) != 0; }
  Arc max_arc() const;

  // Sum of signs of crossings whose strands both lie on component i.
  int self_writhe(int i) const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<Arc> lone_arcs_;
  int declared_m_ = -1;
  std::vector<std::vector<Arc>> components_;
  std::map<Arc, int> arc_component_;
};

// An oriented string link diagram on m strands. Strand i connects bottom
// position i with top position i; a strand may flow downward (reversed
// copies produced by cabling do), which flows_up records.
class StringLinkDiagram {
 public:
  StringLinkDiagram() = default;

  static StringLinkDiagram make(std::vector<Crossing> crossings, std::vector<Arc> bottom,
                                std::vector<Arc> top);
  static StringLinkDiagram unchecked(std::vector<Crossing> crossings, std::vector<Arc> bottom,
                                     std::vector<Arc> top);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Arc>& bottom() const { return bottom_; }
  const std::vector<Arc>& top() const { return top_; }

  int m() const { return static_cast<int>(bottom_.size()); }
  // Strand arc chains in flow order.
  const std::vector<std::vector<Arc>>& strands() const { return strands_; }
  const std::vector<bool>& flows_up() const { return flows_up_; }
  int strand_of(Arc a) const;
  Arc max_arc() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<Arc> bottom_;
  std::vector<Arc> top_;
  std::vector<std::vector<Arc>> strands_;
  std::vector<bool> flows_up_;
  std::map<Arc, int> arc_strand_;
};

// Full invariant check; empty report means the value is well formed.
std::vector<ValidationIssue> validate(const LinkDiagram& d);
std::vector<ValidationIssue> validate(const StringLinkDiagram& s);

// Shared tracing helper: follows in-arc -> out-arc transitions through the
// crossing list. Open chain starts are given in `chain_starts` (string link
// bottoms of upward strands, tops of downward ones); remaining arcs must
// close into cycles.
Traversal trace_arcs(const std::vector<Crossing>& crossings, const std::vector<Arc>& lone_arcs,
                     const std::vector<Arc>& chain_starts);

}  // namespace shakelink
