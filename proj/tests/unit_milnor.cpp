#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "shakelink/fixtures.hpp"
#include "shakelink/milnor.hpp"
#include "shakelink/ops.hpp"
#include "shakelink/wirtinger.hpp"

using namespace shakelink;

namespace {

long long mu_of(const LinkDiagram& d, const std::vector<int>& index,
                BaseArcPolicy policy = BaseArcPolicy::lowest_arc) {
  MilnorCalculator calc(d, static_cast<int>(index.size()), policy);
  return calc.mu(index);
}

}  // namespace

TEST_CASE("wirtinger presentations count one generator per arc") {
  WirtingerPresentation hp = wirtinger(hopf());
  CHECK(hp.generators.size() == 4);
  CHECK(hp.relations.size() == 2);
  CHECK(hp.base == (std::vector<Arc>{1, 3}));

  WirtingerPresentation tp = wirtinger(trefoil());
  CHECK(tp.generators.size() == 6);
  CHECK(tp.relations.size() == 3);

  WirtingerPresentation bp = wirtinger(borromean());
  CHECK(bp.generators.size() == 12);
  CHECK(bp.relations.size() == 6);
  for (const WirtingerRelation& r : bp.relations) {
    CHECK(r.exponent == (r.exponent > 0 ? 1 : -1));
    CHECK(r.out != r.in);
  }

  WirtingerPresentation hi = wirtinger(hopf(), BaseArcPolicy::highest_arc);
  CHECK(hi.base == (std::vector<Arc>{2, 4}));
}

TEST_CASE("component walks visit every arc once") {
  LinkDiagram b = borromean();
  WirtingerPresentation p = wirtinger(b);
  auto walks = component_walks(b, p.base);
  REQUIRE(walks.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(walks[i].size() == 4);
    CHECK(walks[i].front().arc == p.base[i]);
    int unders = 0;
    for (const StrandStep& st : walks[i]) unders += st.under ? 1 : 0;
    CHECK(unders == 2);
  }
  auto lone = component_walks(unlink(2), {1, 2});
  CHECK(lone[0].empty());
  CHECK(lone[1].empty());
}

TEST_CASE("mu of length two is the linking number") {
  std::vector<LinkDiagram> suite = {
      hopf(),
      closure(clasp()),
      borromean(),
      meridian_borromean(),
      meridian_unlink(),
      finger_hopf(),
      commutator_link(),
      split_union(hopf(), trefoil()),
      with_meridian(trefoil()),
      finger_link(open_knot(trefoil())),
  };
  for (const LinkDiagram& d : suite) {
    MilnorCalculator calc(d, 2);
    for (int i = 0; i < d.m(); ++i) {
      for (int j = 0; j < d.m(); ++j) {
        if (i == j) continue;
        CHECK(calc.mu({i + 1, j + 1}) == linking_number(d, i, j));
      }
    }
  }
}

TEST_CASE("hopf mu matches the documented line") {
  MilnorCalculator calc(hopf(), 2);
  MuResult r = calc.evaluate({1, 2});
  CHECK(r.value == 1);
  CHECK(r.delta == 0);
  CHECK(r.mubar == 1);
  CHECK(r.q == 2);
  CHECK(mu_line("12", r) == "mu I=12 value=1 delta=0 mubar=1 q=2");
  CHECK(calc.evaluate({2, 1}).value == 1);
  CHECK(mu_of(mirror(hopf()), {1, 2}) == -1);
}

TEST_CASE("self indices vanish after the framing correction") {
  CHECK(mu_of(braid_closure(2, {1}), {1, 1}) == 0);
  CHECK(mu_of(trefoil(), {1, 1}) == 0);
  CHECK(mu_of(figure_eight(), {1, 1}) == 0);
  MilnorCalculator deep(trefoil_sum(2), 4);
  CHECK(deep.mu({1, 1, 1, 1}) == 0);
}

TEST_CASE("borromean rings carry a unit triple invariant") {
  LinkDiagram b = borromean();
  MilnorCalculator calc(b, 3);
  long long v = calc.mu({1, 2, 3});
  CHECK((v == 1 || v == -1));
  CHECK(calc.delta({1, 2, 3}) == 0);
  CHECK(calc.evaluate({1, 2, 3}).mubar == v);

  // cyclic rotations agree, swapping the first pair negates
  CHECK(calc.mu({2, 3, 1}) == v);
  CHECK(calc.mu({3, 1, 2}) == v);
  CHECK(calc.mu({2, 1, 3}) == -v);

  // every shorter invariant vanishes
  FirstNonVanishing f = first_nonvanishing(b, 4);
  CHECK(f.length == 3);
  for (const auto& [index, value] : f.values) {
    CHECK((value == 1 || value == -1));
  }
  CHECK(f.values.size() == 6);
}

TEST_CASE("unlinks have no invariants at all") {
  CHECK(first_nonvanishing(unlink(3), 4).length == 0);
  MilnorCalculator calc(unlink(2), 3);
  CHECK(calc.mu({1, 2}) == 0);
  CHECK(calc.mu({1, 2, 2}) == 0);
}

TEST_CASE("meridian companions all look like hopf at first order") {
  FirstNonVanishing hopf_set = first_nonvanishing(hopf(), 4);
  CHECK(hopf_set.length == 2);
  REQUIRE(hopf_set.values.size() == 2);
  CHECK(hopf_set.values[0].second == 1);
  CHECK(hopf_set.values[1].second == 1);

  CHECK(first_nonvanishing(with_meridian(trefoil()), 4) == hopf_set);
  CHECK(first_nonvanishing(with_meridian(trefoil_sum(2)), 4) == hopf_set);
  CHECK(first_nonvanishing(finger_hopf(), 4) == hopf_set);
  CHECK(first_nonvanishing(finger_link(open_knot(trefoil())), 4) == hopf_set);
}

TEST_CASE("the meridian pair differs exactly at the ring sublink") {
  LinkDiagram withrings = meridian_borromean();
  LinkDiagram without = meridian_unlink();

  MilnorCalculator a(sublink(withrings, {0, 1, 2}), 3);
  MilnorCalculator b(sublink(without, {0, 1, 2}), 3);
  long long va = a.mu({1, 2, 3});
  CHECK((va == 1 || va == -1));
  CHECK(b.mu({1, 2, 3}) == 0);

  // the full diagrams agree on linking data
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      CHECK(mu_of(withrings, {i + 1, j + 1}) == mu_of(without, {i + 1, j + 1}));
    }
  }
}

TEST_CASE("isotopic diagrams of one link agree on every reduced value") {
  FirstNonVanishing a = first_nonvanishing(commutator_link(), 4);
  FirstNonVanishing h = first_nonvanishing(commutator_link_kinked(), 4);
  CHECK(a.length > 2);
  CHECK(a == h);
}

TEST_CASE("truncation depth does not move the values") {
  struct Probe {
    LinkDiagram d;
    std::vector<int> index;
  };
  std::vector<Probe> probes = {
      {hopf(), {1, 2}},
      {with_meridian(trefoil()), {1, 2}},
      {finger_link(open_knot(trefoil())), {2, 1}},
      {borromean(), {1, 2, 3}},
      {meridian_borromean(), {1, 2, 3}},
      {commutator_link(), {1, 2, 2, 1}},
  };
  for (const Probe& p : probes) {
    int l = static_cast<int>(p.index.size());
    MilnorCalculator shallow(p.d, l);
    MilnorCalculator deep(p.d, l + 2);
    CHECK(shallow.mu(p.index) == deep.mu(p.index));
    CHECK(shallow.delta(p.index) == deep.delta(p.index));
  }
}

TEST_CASE("reversing one component flips sign by its occurrences") {
  LinkDiagram h = hopf();
  CHECK(mu_of(h, {1, 2}) == 1);
  CHECK(mu_of(reverse_component(h, 0), {1, 2}) == -1);
  CHECK(mu_of(reverse_component(h, 1), {1, 2}) == -1);
  CHECK(mu_of(reverse_component(reverse_component(h, 0), 1), {1, 2}) == 1);

  LinkDiagram b = borromean();
  long long v = mu_of(b, {1, 2, 3});
  for (int c = 0; c < 3; ++c) {
    CHECK(mu_of(reverse_component(b, c), {1, 2, 3}) == -v);
  }
}

TEST_CASE("base arc choice does not change the answers") {
  for (const LinkDiagram& d : {hopf(), borromean(), meridian_borromean(),
                               finger_link(open_knot(trefoil()))}) {
    for (int len = 2; len <= 3; ++len) {
      if (d.m() < 2) continue;
      FirstNonVanishing low = first_nonvanishing(d, len);
      FirstNonVanishing high = first_nonvanishing(d, len, BaseArcPolicy::highest_arc);
      CHECK(low == high);
    }
  }
  CHECK(mu_of(borromean(), {1, 2, 3}) ==
        mu_of(borromean(), {1, 2, 3}, BaseArcPolicy::highest_arc));
}

TEST_CASE("index plumbing round trips and rejects junk") {
  CHECK(parse_index("123") == (std::vector<int>{1, 2, 3}));
  CHECK(index_digits({1, 2, 3}) == "123");
  CHECK_THROWS_AS(parse_index("1"), DiagramError);
  CHECK_THROWS_AS(parse_index("10"), DiagramError);
  CHECK_THROWS_AS(parse_index("ab"), DiagramError);
  CHECK_THROWS_AS(index_digits({11}), DiagramError);

  MilnorCalculator calc(hopf(), 2);
  CHECK_THROWS_AS(calc.mu({1}), DiagramError);
  CHECK_THROWS_AS(calc.mu({1, 3}), DiagramError);
  CHECK_THROWS_AS(calc.mu({1, 2, 2, 1}), DiagramError);
}

TEST_CASE("the degree cap from the environment clamps calculators") {
  setenv("SHAKELINK_MAX_DEGREE", "3", 1);
  CHECK(max_degree_cap() == 3);
  MilnorCalculator capped(borromean(), 6);
  CHECK(capped.degree() == 3);
  setenv("SHAKELINK_MAX_DEGREE", "99", 1);
  CHECK(max_degree_cap() == kMaxDegree);
  setenv("SHAKELINK_MAX_DEGREE", "junk", 1);
  CHECK(max_degree_cap() == kMaxDegree);
  unsetenv("SHAKELINK_MAX_DEGREE");
  CHECK(max_degree_cap() == kMaxDegree);
}

TEST_CASE("series inverses really invert") {
  TruncatedSeries s = TruncatedSeries::generator(1, 1, 4);
  s = s.multiplied(TruncatedSeries::generator(2, -1, 4));
  s = s.multiplied(TruncatedSeries::generator(1, 1, 4));
  TruncatedSeries prod = s.multiplied(inverse_of(s));
  CHECK(prod == TruncatedSeries::one(4));
  CHECK(inverse_of(s).multiplied(s) == TruncatedSeries::one(4));
  CHECK_THROWS_AS(inverse_of(TruncatedSeries(3)), SeriesError);
}
