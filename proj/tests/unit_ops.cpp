#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "shakelink/diagram.hpp"
#include "shakelink/fixtures.hpp"
#include "shakelink/ops.hpp"
#include "shakelink/pd_io.hpp"

using namespace shakelink;

namespace {

std::string text(const LinkDiagram& d) { return emit_pd(d); }

int crossings_of(const LinkDiagram& d) { return static_cast<int>(d.crossings().size()); }

}  // namespace

TEST_CASE("braid closures produce the classical fixtures") {
  LinkDiagram t = trefoil();
  CHECK(t.m() == 1);
  CHECK(crossings_of(t) == 3);
  CHECK(t.self_writhe(0) == 3);

  LinkDiagram f8 = figure_eight();
  CHECK(f8.m() == 1);
  CHECK(crossings_of(f8) == 4);
  CHECK(f8.self_writhe(0) == 0);

  LinkDiagram b = borromean();
  CHECK(b.m() == 3);
  CHECK(crossings_of(b) == 6);
  for (int i = 0; i < 3; ++i) {
    CHECK(b.self_writhe(i) == 0);
    for (int j = i + 1; j < 3; ++j) CHECK(linking_number(b, i, j) == 0);
  }

  // single positive letter closes to a one crossing curl
  LinkDiagram curl = braid_closure(2, {1});
  CHECK(curl.m() == 1);
  CHECK(curl.self_writhe(0) == 1);

  // a letter that permutes strands is not a string link
  CHECK_THROWS_AS(from_braid(2, {1}), DiagramError);
  CHECK_THROWS_AS(from_braid(2, {1, 2}), DiagramError);
}

TEST_CASE("clasp closure carries linking number one") {
  LinkDiagram c = closure(clasp());
  CHECK(c.m() == 2);
  CHECK(linking_number(c, 0, 1) == 1);

  LinkDiagram h = hopf();
  CHECK(linking_number(h, 0, 1) == 1);
}

TEST_CASE("the meridian of the unknot is the hopf diagram") {
  CHECK(text(with_meridian(unknot())) == text(hopf()));
}

TEST_CASE("adding a meridian links once with the chosen sign") {
  LinkDiagram t = trefoil();
  LinkDiagram plus = with_meridian(t);
  CHECK(plus.m() == 2);
  CHECK(linking_number(plus, 0, 1) == 1);
  CHECK(plus.self_writhe(0) == 3);
  CHECK(plus.self_writhe(1) == 0);

  LinkDiagram minus = add_meridian(t, t.components()[0][1], -1);
  CHECK(linking_number(minus, 0, 1) == -1);
}

TEST_CASE("opening a knot and closing again preserves its shape") {
  for (const LinkDiagram& k : {trefoil(), figure_eight(), trefoil_sum(2)}) {
    StringLinkDiagram open = open_knot(k);
    CHECK(open.m() == 1);
    LinkDiagram back = closure(open);
    CHECK(back.m() == 1);
    CHECK(crossings_of(back) == crossings_of(k));
    CHECK(back.self_writhe(0) == k.self_writhe(0));
  }
  StringLinkDiagram moved = open_knot(unknot());
  CHECK(moved.m() == 1);
  CHECK(closure(moved).m() == 1);
  CHECK_THROWS_AS(open_knot(hopf()), DiagramError);
}

TEST_CASE("connected sums of trefoils stack writhe") {
  LinkDiagram two = trefoil_sum(2);
  CHECK(two.m() == 1);
  CHECK(crossings_of(two) == 6);
  CHECK(two.self_writhe(0) == 6);
  CHECK(trefoil_sum(3).self_writhe(0) == 9);
}

TEST_CASE("split unions keep parts independent") {
  LinkDiagram u = split_union(hopf(), trefoil());
  CHECK(u.m() == 3);
  CHECK(linking_number(u, 0, 1) == 1);
  CHECK(linking_number(u, 0, 2) == 0);
  CHECK(linking_number(u, 1, 2) == 0);
  CHECK(u.self_writhe(2) == 3);
}

TEST_CASE("mirror flips every sign") {
  CHECK(linking_number(mirror(hopf()), 0, 1) == -1);
  CHECK(mirror(trefoil()).self_writhe(0) == -3);
  LinkDiagram b = meridian_borromean();
  CHECK(text(mirror(mirror(b))) == text(b));
}

TEST_CASE("reversing components flips linking signs pairwise") {
  LinkDiagram h = hopf();
  CHECK(linking_number(reverse_component(h, 0), 0, 1) == -1);
  CHECK(linking_number(reverse_component(h, 1), 0, 1) == -1);
  LinkDiagram both = reverse_component(reverse_component(h, 0), 1);
  CHECK(linking_number(both, 0, 1) == 1);
  CHECK(text(reverse_component(reverse_component(h, 0), 0)) == text(h));
  CHECK(reverse_component(trefoil(), 0).self_writhe(0) == 3);
}

TEST_CASE("sublinks keep chosen components and their interactions") {
  LinkDiagram big = meridian_borromean();
  CHECK(big.m() == 4);
  CHECK(linking_number(big, 2, 3) == 1);

  LinkDiagram rings = sublink(big, {0, 1, 2});
  CHECK(rings.m() == 3);
  CHECK(crossings_of(rings) == 6);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) CHECK(linking_number(rings, i, j) == 0);
  }

  LinkDiagram pair = sublink(big, {2, 3});
  CHECK(pair.m() == 2);
  CHECK(crossings_of(pair) == 2);
  CHECK(linking_number(pair, 0, 1) == 1);

  LinkDiagram alone = sublink(big, {3});
  CHECK(alone.m() == 1);
  CHECK(crossings_of(alone) == 0);

  LinkDiagram swapped = sublink(big, {3, 2});
  CHECK(linking_number(swapped, 0, 1) == 1);

  CHECK_THROWS_AS(sublink(big, {0, 0}), DiagramError);
  CHECK_THROWS_AS(sublink(big, {4}), DiagramError);
}

TEST_CASE("permuting components relabels linking numbers") {
  LinkDiagram big = meridian_borromean();
  LinkDiagram p = permute_components(big, {3, 2, 1, 0});
  CHECK(p.m() == 4);
  CHECK(linking_number(p, 0, 1) == 1);
  CHECK(linking_number(p, 2, 3) == 0);
}

TEST_CASE("identity cables change nothing") {
  for (const LinkDiagram& d : {trefoil(), borromean(), meridian_borromean()}) {
    std::vector<CopyPattern> patterns(d.m(), CopyPattern{{1}});
    std::vector<int> twists(d.m(), 0);
    CableResult r = cable_all(d, patterns, twists);
    CHECK(text(r.diagram) == text(d));
    for (int i = 0; i < d.m(); ++i) CHECK(r.copy_component[i] == std::vector<int>{i});
  }
}

TEST_CASE("parallel copies of a curl link by its writhe") {
  LinkDiagram curl = braid_closure(2, {1});
  CableResult two = cable_component(curl, 0, CopyPattern{{1, 1}}, 0);
  CHECK(two.diagram.m() == 2);
  CHECK(crossings_of(two.diagram) == 4);
  CHECK(two.diagram.self_writhe(0) == 1);
  CHECK(two.diagram.self_writhe(1) == 1);
  CHECK(linking_number(two.diagram, 0, 1) == 1);

  CableResult framed = cable_component(curl, 0, CopyPattern{{1, 1}}, -1);
  CHECK(linking_number(framed.diagram, 0, 1) == 0);

  CableResult anti = cable_component(curl, 0, CopyPattern{{1, -1}}, 0);
  CHECK(linking_number(anti.diagram, 0, 1) == -1);
  CHECK(anti.diagram.self_writhe(0) == 1);
  CHECK(anti.diagram.self_writhe(1) == 1);
}

TEST_CASE("shaking with framing r makes copies link r times") {
  LinkDiagram t = trefoil();
  for (int r : {-1, 0, 2}) {
    CableResult s = r_shaking(t, {CopyPattern{{1, 1}}}, r);
    CHECK(s.diagram.m() == 2);
    CHECK(linking_number(s.diagram, 0, 1) == r);
  }
}

TEST_CASE("a hopf shaking spreads linking by copy orientation") {
  LinkDiagram h = hopf();
  CableResult s = r_shaking(h, {CopyPattern{{1, 1, -1}}, CopyPattern{{1}}}, 0);
  CHECK(s.diagram.m() == 4);
  int last = s.copy_component[1][0];
  CHECK(linking_number(s.diagram, s.copy_component[0][0], last) == 1);
  CHECK(linking_number(s.diagram, s.copy_component[0][1], last) == 1);
  CHECK(linking_number(s.diagram, s.copy_component[0][2], last) == -1);
  CHECK(linking_number(s.diagram, s.copy_component[0][0], s.copy_component[0][1]) == 0);
  CHECK(linking_number(s.diagram, s.copy_component[0][0], s.copy_component[0][2]) == 0);
  CHECK(linking_number(s.diagram, s.copy_component[0][1], s.copy_component[0][2]) == 0);
}

TEST_CASE("string link cables place copies at consecutive positions") {
  StringLinkDiagram b = borromean_strands();
  StringCableResult same =
      cable_string_link(b, {CopyPattern{{1}}, CopyPattern{{1}}, CopyPattern{{1}}});
  CHECK(emit_pd(same.diagram) == emit_pd(b));

  StringCableResult r =
      cable_string_link(b, {CopyPattern{{1}}, CopyPattern{{1, -1}}, CopyPattern{{1}}});
  CHECK(r.diagram.m() == 4);
  CHECK(r.copy_strand[0] == std::vector<int>{0});
  CHECK(r.copy_strand[1] == (std::vector<int>{1, 2}));
  CHECK(r.copy_strand[2] == std::vector<int>{3});
  CHECK(r.diagram.flows_up()[1]);
  CHECK_FALSE(r.diagram.flows_up()[2]);
  CHECK(closure(r.diagram).m() == 4);

  StringCableResult c = cable_string_link(clasp(), {CopyPattern{{1, 1}}, CopyPattern{{1}}});
  LinkDiagram cc = closure(c.diagram);
  CHECK(cc.m() == 3);
  CHECK(linking_number(cc, 0, 1) == 0);
  CHECK(linking_number(cc, 0, 2) == 1);
  CHECK(linking_number(cc, 1, 2) == 1);
}

TEST_CASE("bands fuse split components into one") {
  LinkDiagram two = unlink(2);
  BandSpec flat;
  flat.end1 = 1;
  flat.end2 = 2;
  LinkDiagram fused = band_sum(two, flat);
  CHECK(fused.m() == 1);
  CHECK(crossings_of(fused) == 0);

  BandSpec hb;
  hb.end1 = 1;
  hb.end2 = 3;
  LinkDiagram hf = band_sum(hopf(), hb);
  CHECK(hf.m() == 1);
  CHECK(crossings_of(hf) == 2);
  CHECK(hf.self_writhe(0) == 2);
}

TEST_CASE("flat bands absorb split circles from either end") {
  LinkDiagram d = split_union(hopf(), unlink(1));
  Arc circle = d.components()[2].front();

  BandSpec from_circle;
  from_circle.end1 = circle;
  from_circle.end2 = d.components()[0].front();
  LinkDiagram a = band_sum(d, from_circle);
  CHECK(a.m() == 2);
  CHECK(linking_number(a, 0, 1) == 1);

  BandSpec into_circle;
  into_circle.end1 = d.components()[0].front();
  into_circle.end2 = circle;
  LinkDiagram b = band_sum(d, into_circle);
  CHECK(b.m() == 2);
  CHECK(linking_number(b, 0, 1) == 1);
  CHECK(emit_pd(a) == emit_pd(b));
}

TEST_CASE("band attachments must be orientation coherent") {
  BandSpec bad;
  bad.end1 = 1;
  bad.end2 = 2;
  bad.side2 = Side::left;
  CHECK_THROWS_AS(band_sum(unlink(2), bad), DiagramError);

  BandSpec odd = bad;
  odd.side2 = Side::right;
  odd.half_twists = 1;
  CHECK_THROWS_AS(band_sum(unlink(2), odd), DiagramError);

  BandSpec same;
  same.end1 = 1;
  same.end2 = 1;
  CHECK_THROWS_AS(band_sum(unlink(2), same), DiagramError);
}

TEST_CASE("band twists leave their signature on the fused component") {
  BandSpec spec;
  spec.end1 = 1;
  spec.end2 = 2;
  spec.side2 = Side::left;
  spec.half_twists = 1;
  LinkDiagram one = band_sum(unlink(2), spec);
  CHECK(one.m() == 1);
  CHECK(crossings_of(one) == 1);
  CHECK(one.self_writhe(0) == -1);

  spec.half_twists = -1;
  CHECK(band_sum(unlink(2), spec).self_writhe(0) == 1);

  spec.half_twists = 2;
  spec.side2 = Side::right;
  LinkDiagram twisted = band_sum(unlink(2), spec);
  CHECK(crossings_of(twisted) == 2);
  CHECK(twisted.self_writhe(0) == -2);
}

TEST_CASE("routing a band across another component adds no net linking") {
  LinkDiagram three = unlink(3);
  BandSpec spec;
  spec.end1 = 1;
  spec.end2 = 2;
  spec.route = {RouteEntry{3, true, 1}};
  LinkDiagram routed = band_sum(three, spec);
  CHECK(routed.m() == 2);
  CHECK(crossings_of(routed) == 2);
  CHECK(linking_number(routed, 0, 1) == 0);

  spec.route = {RouteEntry{3, false, -1}, RouteEntry{3, true, 1}};
  LinkDiagram doubled = band_sum(three, spec);
  CHECK(doubled.m() == 2);
  CHECK(crossings_of(doubled) == 4);
  CHECK(linking_number(doubled, 0, 1) == 0);
}

TEST_CASE("banding hopf copies cancels their linking") {
  // two opposite copies of one hopf component fused back together give a
  // diagram whose linking with the untouched component vanishes
  CableResult s = r_shaking(hopf(), {CopyPattern{{1, 1, -1}}, CopyPattern{{1}}}, 0);
  const LinkDiagram& d = s.diagram;
  Arc e1 = d.components()[s.copy_component[0][1]].front();
  Arc e2 = d.components()[s.copy_component[0][2]].front();
  BandSpec spec;
  spec.end1 = e1;
  spec.end2 = e2;
  LinkDiagram fused = band_sum(d, spec);
  CHECK(fused.m() == 3);
  int merid = fused.m() - 1;
  CHECK(linking_number(fused, 1, merid) == 0);
  CHECK(linking_number(fused, 0, merid) == 1);
}

TEST_CASE("multidisk respect checks count passages") {
  LinkDiagram two = unlink(2);
  MultidiskSpec good;
  good.subdisks = {{{1, 1}}, {{2, 1}}};
  CHECK(respects(two, good));
  CHECK(strongly_respects(two, good));

  MultidiskSpec crossed;
  crossed.subdisks = {{{1, 1}, {2, 1}}, {{2, 1}}};
  CHECK_FALSE(respects(two, crossed));

  MultidiskSpec cancelling;
  cancelling.subdisks = {{{1, 1}, {2, 1}, {2, -1}}, {{2, 1}}};
  CHECK(respects(two, cancelling));
  CHECK_FALSE(strongly_respects(two, cancelling));

  CHECK_FALSE(respects(finger_hopf(), finger_disks()));
}

TEST_CASE("infection with trivial strands is the identity") {
  LinkDiagram b = borromean();
  MultidiskSpec e;
  e.subdisks = {{{Passage{b.components()[0].front(), 1}}},
                {{Passage{b.components()[1].front(), 1}}},
                {{Passage{b.components()[2].front(), 1}}}};
  CHECK(respects(b, e));
  InfectResult r = infect(b, e, trivial_string_link(3));
  CHECK_FALSE(r.respects_warning);
  CHECK(text(r.diagram) == text(b));
}

TEST_CASE("infecting an unlink by a clasp produces its closure") {
  LinkDiagram two = unlink(2);
  MultidiskSpec e;
  e.subdisks = {{{1, 1}}, {{2, 1}}};
  InfectResult r = infect(two, e, clasp());
  CHECK_FALSE(r.respects_warning);
  CHECK(r.diagram.m() == 2);
  CHECK(crossings_of(r.diagram) == 2);
  CHECK(linking_number(r.diagram, 0, 1) == 1);
}

TEST_CASE("the finger link of the trivial pattern is the finger hopf") {
  LinkDiagram fh = finger_hopf();
  CHECK(fh.m() == 2);
  CHECK(linking_number(fh, 0, 1) == 1);
  CHECK(fh.self_writhe(0) == 0);
  CHECK(fh.self_writhe(1) == 0);
  CHECK(text(finger_link(trivial_string_link(1))) == text(fh));
}

TEST_CASE("tying a trefoil into the finger keeps the linking number") {
  LinkDiagram lk = finger_link(open_knot(trefoil()));
  CHECK(lk.m() == 2);
  CHECK(crossings_of(lk) == 18);
  CHECK(linking_number(lk, 0, 1) == 1);
  CHECK(lk.self_writhe(0) == 0);
  CHECK(lk.self_writhe(1) == 0);
}

TEST_CASE("meridian companions share linking profiles") {
  LinkDiagram a = meridian_borromean();
  LinkDiagram b = meridian_unlink();
  CHECK(a.m() == 4);
  CHECK(b.m() == 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      CHECK(linking_number(a, i, j) == linking_number(b, i, j));
    }
  }
  CHECK(linking_number(a, 2, 3) == 1);
}

TEST_CASE("commutator link diagrams agree on linking data") {
  LinkDiagram a = commutator_link();
  LinkDiagram h = commutator_link_kinked();
  CHECK(a.m() == 3);
  CHECK(h.m() == 3);
  CHECK(crossings_of(h) == crossings_of(a) + 4);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      CHECK(linking_number(a, i, j) == 0);
      CHECK(linking_number(h, i, j) == 0);
    }
  }
}

TEST_CASE("fixture names resolve to the documented diagrams") {
  CHECK(text(std::get<LinkDiagram>(fixture("hopf"))) == text(hopf()));
  CHECK(text(std::get<LinkDiagram>(fixture("h(unknot)"))) == text(hopf()));
  CHECK(text(std::get<LinkDiagram>(fixture("L(unknot)"))) == text(finger_hopf()));
  CHECK(std::get<LinkDiagram>(fixture("unlink(3)")).m() == 3);
  CHECK(std::get<LinkDiagram>(fixture("trefoil_sum(2)")).self_writhe(0) == 6);
  CHECK(std::get<StringLinkDiagram>(fixture("borromean_sl")).m() == 3);
  CHECK(std::get<StringLinkDiagram>(fixture("trivial_sl(2)")).m() == 2);
  CHECK(std::get<LinkDiagram>(fixture("fig11_L")).m() == 4);
  CHECK(std::get<LinkDiagram>(fixture("levine_A")).m() == 3);
  CHECK(text(std::get<LinkDiagram>(fixture("h(trefoil_sum(2))"))) ==
        text(with_meridian(trefoil_sum(2))));
  CHECK_THROWS_AS(fixture("nonsense"), DiagramError);
  CHECK_THROWS_AS(fixture("unlink(x)"), DiagramError);
  CHECK_THROWS_AS(fixture("h(hopf)"), DiagramError);
  CHECK(!fixture_names().empty());
}

TEST_CASE("stacking and juxtaposition compose string links") {
  StringLinkDiagram doubled = compose(clasp(), clasp());
  CHECK(doubled.m() == 2);
  CHECK(linking_number(closure(doubled), 0, 1) == 2);

  StringLinkDiagram wide = side_by_side(clasp(), trivial_string_link(1));
  CHECK(wide.m() == 3);
  LinkDiagram wc = closure(wide);
  CHECK(linking_number(wc, 0, 1) == 1);
  CHECK(linking_number(wc, 0, 2) == 0);
  CHECK(linking_number(wc, 1, 2) == 0);
}
