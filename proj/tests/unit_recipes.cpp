#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "shakelink/fixtures.hpp"
#include "shakelink/milnor.hpp"
#include "shakelink/ops.hpp"
#include "shakelink/randomgen.hpp"
#include "shakelink/recipes.hpp"

using namespace shakelink;

namespace {

MultidiskSpec simple_disks(const LinkDiagram& d) {
  MultidiskSpec e;
  for (int i = 0; i < d.m(); ++i) {
    e.subdisks.push_back({{d.components()[i].front(), 1}});
  }
  return e;
}

bool all_odd(const std::vector<int>& v) {
  for (int x : v) {
    if (x % 2 == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pairwise linking flattens the upper triangle") {
  CHECK(pairwise_linking(hopf()) == std::vector<int>{1});
  CHECK(pairwise_linking(borromean()) == std::vector<int>{0, 0, 0});
  std::vector<int> fh = pairwise_linking(meridian_borromean());
  CHECK(fh.size() == 6);
  CHECK(fh == std::vector<int>{0, 0, 0, 0, 0, 1});
}

TEST_CASE("comparing a diagram against itself agrees everywhere") {
  ConcordancePairReport r;
  r.before = hopf();
  r.after = hopf();
  r.profile_before = {1, 1};
  r.profile_after = {1, 1};
  compare_endpoints(r);
  CHECK(r.linking_agrees);
  CHECK(r.first_agrees);
  CHECK(r.verdict());
  CHECK(pair_line(r) == "pair profile=1,1;1,1 verdict=pass");
}

TEST_CASE("comparison rejects mismatched component counts") {
  ConcordancePairReport r;
  r.before = hopf();
  r.after = borromean();
  CHECK_THROWS_AS(compare_endpoints(r), DiagramError);
}

TEST_CASE("crossing change on the trefoil reaches the unknot with meridian") {
  ConcordancePairReport r = crossing_change_recipe(open_knot(trefoil()), 0);
  CHECK(r.profile_before == std::vector<int>{1, 3});
  CHECK(r.profile_after == std::vector<int>{1, 1});
  CHECK(all_odd(r.profile_before));
  CHECK(r.lk_before == std::vector<int>{1});
  CHECK(r.lk_after == std::vector<int>{1});
  CHECK(r.first_after.length == 2);
  REQUIRE(r.first_after.values.size() == 2);
  CHECK(r.first_after.values[0].second == 1);
  CHECK(r.matches_companion);
  CHECK(r.verdict());
  CHECK(pair_line(r) == "pair profile=1,3;1,1 verdict=pass");
}

TEST_CASE("crossing change bands tolerate twists of either parity") {
  CHECK(crossing_change_recipe(open_knot(trefoil()), 1, 2).verdict());
  CHECK(crossing_change_recipe(open_knot(trefoil()), 2, 1).verdict());
  CHECK(crossing_change_recipe(open_knot(trefoil()), 2, -3).verdict());
}

TEST_CASE("crossing change on every trefoil crossing and on a curl") {
  for (int c = 0; c < 3; ++c) {
    CHECK(crossing_change_recipe(open_knot(trefoil()), c).verdict());
  }
  CHECK(crossing_change_recipe(open_knot(braid_closure(2, {1})), 0).verdict());
}

TEST_CASE("crossing change validates its inputs") {
  CHECK_THROWS_AS(crossing_change_recipe(clasp(), 0), DiagramError);
  CHECK_THROWS_AS(crossing_change_recipe(open_knot(trefoil()), 3), DiagramError);
  CHECK_THROWS_AS(crossing_change_recipe(open_knot(trefoil()), -1), DiagramError);
}

TEST_CASE("strong shake of the hopf link with a trivial pattern") {
  ConcordancePairReport r = strong_shake_hopf_recipe(trivial_string_link(1));
  CHECK(r.profile_before == std::vector<int>{1, 1});
  CHECK(r.profile_after == std::vector<int>{3, 1});
  CHECK(r.lk_before == std::vector<int>{1});
  CHECK(r.matches_companion);
  CHECK(r.verdict());
  CHECK(pair_line(r) == "pair profile=1,1;3,1 verdict=pass");
}

TEST_CASE("strong shake carries knot patterns through the finger") {
  for (const LinkDiagram& knot : {trefoil(), figure_eight()}) {
    ConcordancePairReport r = strong_shake_hopf_recipe(open_knot(knot));
    CHECK(r.lk_before == std::vector<int>{1});
    CHECK(r.first_before.length == 2);
    CHECK(r.matches_companion);
    CHECK(r.verdict());
  }
}

TEST_CASE("infection endpoint comparison on the clasp") {
  LinkDiagram u2 = unlink(2);
  ConcordancePairReport r = lemma41_recipe(u2, clasp(), simple_disks(u2));
  CHECK(r.profile_before == std::vector<int>{1, 1});
  CHECK(r.profile_after == std::vector<int>{1, 1});
  CHECK(r.lk_before == std::vector<int>{1});
  CHECK(r.lk_after == std::vector<int>{1});
  CHECK(r.verdict());
}

TEST_CASE("infection endpoint comparison survives cancelling passes") {
  LinkDiagram u2 = unlink(2);
  Arc a = u2.components()[0].front();
  Arc b = u2.components()[1].front();
  MultidiskSpec e;
  e.subdisks = {{{a, 1}, {b, 1}, {b, -1}}, {{b, 1}}};
  ConcordancePairReport r = lemma41_recipe(u2, clasp(), e);
  CHECK(r.profile_before == std::vector<int>{1, 1});
  CHECK(r.profile_after == std::vector<int>{3, 1});
  CHECK(all_odd(r.profile_after));
  CHECK(r.lk_before == std::vector<int>{1});
  CHECK(r.verdict());
}

TEST_CASE("infection endpoint comparison at length three") {
  LinkDiagram u3 = unlink(3);
  ConcordancePairReport r = lemma41_recipe(u3, borromean_strands(), simple_disks(u3));
  CHECK(r.lk_before == std::vector<int>{0, 0, 0});
  CHECK(r.first_before.length == 3);
  CHECK(r.first_before.values.size() == 6);
  CHECK(r.verdict());

  Arc a = u3.components()[0].front();
  MultidiskSpec doubled;
  doubled.subdisks = {{{a, 1}, {a, 1}, {a, -1}},
                      {{u3.components()[1].front(), 1}},
                      {{u3.components()[2].front(), 1}}};
  ConcordancePairReport rd = lemma41_recipe(u3, borromean_strands(), doubled);
  CHECK(rd.profile_after == std::vector<int>{3, 1, 1});
  CHECK(rd.first_before.length == 3);
  CHECK(rd.verdict());
}

TEST_CASE("trivial pattern infection when everything vanishes") {
  LinkDiagram u2 = unlink(2);
  ConcordancePairReport r = lemma41_recipe(u2, trivial_string_link(2), simple_disks(u2));
  CHECK(r.lk_before == std::vector<int>{0});
  CHECK(r.first_before.length == 0);
  CHECK(r.first_after.length == 0);
  CHECK(r.verdict());
}

TEST_CASE("infection comparison rejects disrespectful multidisks") {
  CHECK_THROWS_AS(lemma41_recipe(finger_hopf(), trivial_string_link(2), finger_disks()),
                  DiagramError);
}

TEST_CASE("report lines carry the pair, lk, and mu rows") {
  LinkDiagram u2 = unlink(2);
  ConcordancePairReport r = lemma41_recipe(u2, clasp(), simple_disks(u2));
  std::vector<std::string> lines = report_lines(r);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "pair profile=1,1;1,1 verdict=pass");
  CHECK(lines[1] == "before lk i=1 j=2 value=1");
  CHECK(lines[2] == "before mu I=12 value=1 delta=0 mubar=1 q=2");
  CHECK(lines[4] == "after lk i=1 j=2 value=1");
}

TEST_CASE("additivity holds on the clasp instance") {
  LinkDiagram u2 = unlink(2);
  AdditivityReport a = verify_additivity(u2, clasp(), simple_disks(u2), {1, 2});
  CHECK(a.applicable);
  CHECK(a.host == 0);
  CHECK(a.pattern == 1);
  CHECK(a.infected == 1);
  CHECK(a.infected_clean);
  CHECK(a.pass);
}

TEST_CASE("additivity holds at length three") {
  LinkDiagram u3 = unlink(3);
  AdditivityReport a = verify_additivity(u3, borromean_strands(), simple_disks(u3), {1, 2, 3});
  CHECK(a.applicable);
  CHECK(a.host == 0);
  CHECK(a.pattern == 1);
  CHECK(a.infected == 1);
  CHECK(a.pass);
}

TEST_CASE("additivity hypothesis failures are inapplicable, not failures") {
  AdditivityReport wrong_count = verify_additivity(hopf(), borromean_strands(),
                                                   simple_disks(hopf()), {1, 2});
  CHECK_FALSE(wrong_count.applicable);

  LinkDiagram h = hopf();
  AdditivityReport linked = verify_additivity(h, clasp(), simple_disks(h), {1, 2, 2});
  CHECK_FALSE(linked.applicable);
  CHECK_FALSE(linked.pass);
}

TEST_CASE("cabled sum reproduces the simple instances") {
  LinkDiagram u2 = unlink(2);
  CabledSumReport c = cabled_sum_check(u2, clasp(), simple_disks(u2), {1, 2});
  CHECK(c.applicable);
  CHECK(c.terms == 1);
  CHECK(c.sum == 1);
  CHECK(c.expected == 1);
  CHECK(c.product == 1);
  CHECK(c.pass);
}

TEST_CASE("cabled sum cancels oppositely oriented copies") {
  LinkDiagram u3 = unlink(3);
  Arc a = u3.components()[0].front();
  MultidiskSpec doubled;
  doubled.subdisks = {{{a, 1}, {a, 1}, {a, -1}},
                      {{u3.components()[1].front(), 1}},
                      {{u3.components()[2].front(), 1}}};
  CabledSumReport c = cabled_sum_check(u3, borromean_strands(), doubled, {1, 2, 3});
  CHECK(c.applicable);
  CHECK(c.terms == 3);
  CHECK(c.expected == 1);
  CHECK(c.sum == 1);
  CHECK(c.product == 1);
  CHECK(c.pass);
}

TEST_CASE("cabled sum of a trivial pattern vanishes termwise") {
  LinkDiagram u2 = unlink(2);
  Arc a = u2.components()[0].front();
  Arc b = u2.components()[1].front();
  MultidiskSpec e;
  e.subdisks = {{{a, 1}, {b, 1}, {b, -1}}, {{b, 1}}};
  CabledSumReport c = cabled_sum_check(u2, trivial_string_link(2), e, {1, 2});
  CHECK(c.applicable);
  CHECK(c.terms == 3);
  CHECK(c.sum == 0);
  CHECK(c.expected == 0);
  CHECK(c.pass);
}

TEST_CASE("seeded generators are deterministic") {
  std::mt19937_64 g1 = seeded(11);
  std::mt19937_64 g2 = seeded(11);
  CHECK(random_pure_braid_word(g1, 3, 6) == random_pure_braid_word(g2, 3, 6));
  CHECK(random_group_word(g1, 3, 8) == random_group_word(g2, 3, 8));
  LinkDiagram d1 = random_product(g1);
  LinkDiagram d2 = random_product(g2);
  CHECK(d1.m() == d2.m());
  CHECK(d1.crossings().size() == d2.crossings().size());
}

TEST_CASE("random pure braid words close up to pure braids") {
  std::mt19937_64 g = seeded(5);
  for (int i = 0; i < 20; ++i) {
    StringLinkDiagram s = random_string_link(g, 3, 6);
    CHECK(s.m() == 3);
  }
}

TEST_CASE("random respecting multidisks respect their host") {
  std::mt19937_64 g = seeded(9);
  for (int i = 0; i < 20; ++i) {
    LinkDiagram host = unlink(2 + i % 2);
    MultidiskSpec e = random_respecting_multidisk(g, host, 3);
    CHECK(respects(host, e));
  }
}

TEST_CASE("random products stay in oracle range") {
  std::mt19937_64 g = seeded(23);
  for (int i = 0; i < 10; ++i) {
    LinkDiagram d = random_product(g);
    CHECK(d.m() >= 2);
    MilnorCalculator calc(d, 2);
    for (int a = 0; a < d.m(); ++a) {
      for (int b = a + 1; b < d.m(); ++b) {
        CHECK(calc.mu({a + 1, b + 1}) == linking_number(d, a, b));
      }
    }
  }
}
