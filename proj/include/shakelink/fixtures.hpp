#pragma once

#include <string>
#include <vector>

#include "shakelink/diagram.hpp"
#include "shakelink/ops.hpp"
#include "shakelink/pd_io.hpp"

namespace shakelink {

// Braid word over `strands` positions: letter k in 1..strands-1 crosses the
// strands at positions k and k+1 with the left one passing over; a negative
// letter sends the left strand under instead. Crossings stack bottom to top.
// The word must return every strand to its starting position (make() rejects
// the rest); braid_closure handles arbitrary words.
StringLinkDiagram from_braid(int strands, const std::vector<int>& word);

// Closure of an arbitrary braid word: each top endpoint joins the bottom of
// its own position. Untouched positions become split unknot components.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

StringLinkDiagram trivial_string_link(int m);

// Two strands crossing twice; the closure is the positive Hopf link.
StringLinkDiagram clasp();

// Three strands whose closure is the Borromean rings; all pairwise linking
// numbers of the closure vanish.
StringLinkDiagram borromean_strands();

LinkDiagram unknot();
LinkDiagram unlink(int m);
LinkDiagram hopf();      // positive clasp, linking number +1
LinkDiagram trefoil();   // right handed, writhe +3
LinkDiagram figure_eight();
LinkDiagram trefoil_sum(int k);  // connected sum of k right handed trefoils
LinkDiagram borromean();

// knot plus a small circle around its first arc, linking number +1.
LinkDiagram with_meridian(const LinkDiagram& knot);

// Hopf link drawn with a finger of the first component pushed across the
// second: six crossings, both components unknotted, linking number 1.
LinkDiagram finger_hopf();

// The two subdisks the finger threads: the first catches the finger's two
// opposite passes (first component), the second one pass of the second
// component. Does not respect the link: the finger passes cancel.
MultidiskSpec finger_disks();

// finger_hopf with the open knot `k` tied into the finger. The trivial
// strand gives back finger_hopf itself, a diagram of the Hopf link.
LinkDiagram finger_link(const StringLinkDiagram& k);

// Borromean rings with an extra meridian circle about the third component,
// and its companion with the rings replaced by a trivial link. Both have the
// same linking numbers; the three ring components distinguish them at higher
// order.
LinkDiagram meridian_borromean();
LinkDiagram meridian_unlink();

// Closure of the three strand braid commutator s1^2 s2^2 s1^-2 s2^-2, and
// the same word padded with cancelling letters: two diagrams of one link,
// all pairwise linking numbers zero.
LinkDiagram commutator_link();
LinkDiagram commutator_link_kinked();

// Resolves a fixture by name. Grammar: bare names plus unlink(m),
// trivial_sl(m), trefoil_sum(k), h(knot), L(knot) with knot itself a fixture
// name for a one component link. Throws DiagramError on unknown names.
ParsedDiagram fixture(const std::string& name);

// Accepted name forms, for help output.
std::vector<std::string> fixture_names();

}  // namespace shakelink
