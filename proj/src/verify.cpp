#include "shakelink/verify.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shakelink/fixtures.hpp"
#include "shakelink/milnor.hpp"
#include "shakelink/randomgen.hpp"
#include "shakelink/recipes.hpp"
#include "shakelink/series.hpp"

namespace shakelink {

namespace {

std::vector<std::string> named_fixtures() {
  return {
      "unknot",        "unlink(2)",       "unlink(3)",  "unlink(4)",
      "hopf",          "trefoil",         "figure_eight",
      "trefoil_sum(2)", "trefoil_sum(3)", "borromean",  "clasp",
      "borromean_sl",  "trivial_sl(2)",   "finger_hopf",
      "h(unknot)",     "h(trefoil)",      "h(figure_eight)", "h(trefoil_sum(2))",
      "L(unknot)",     "L(trefoil)",      "L(figure_eight)",
      "fig11_L",       "fig11_Lprime",    "levine_A",   "levine_H",
  };
}

LinkDiagram as_link(const std::string& name) {
  ParsedDiagram p = fixture(name);
  if (const LinkDiagram* d = std::get_if<LinkDiagram>(&p)) return *d;
  return closure(std::get<StringLinkDiagram>(p));
}

std::string pad2(int n) { return (n < 10 ? "0" : "") + std::to_string(n); }

void record(SuiteResult& r, bool ok, std::string line) {
  ++r.checks;
  if (!ok) ++r.failures;
  line += ok ? " ok" : " FAIL";
  r.lines.push_back(std::move(line));
}

MultidiskSpec simple_multidisk(const LinkDiagram& d) {
  MultidiskSpec e;
  for (int i = 0; i < d.m(); ++i) {
    e.subdisks.push_back({{d.components()[i].front(), 1}});
  }
  return e;
}

}  // namespace

SuiteResult verify_magnus(unsigned long long seed) {
  SuiteResult r;
  r.name = "magnus";
  std::mt19937_64 g = seeded(seed);
  for (int i = 0; i < 200; ++i) {
    int gens = 2 + i % 3;
    int letters = 1 + i % 8;
    int q = 2 + i % 4;
    GroupWord u = random_group_word(g, gens, letters);
    GroupWord v = random_group_word(g, gens, letters);
    TruncatedSeries eu = magnus_expand(u, q);
    TruncatedSeries ev = magnus_expand(v, q);
    bool hom = magnus_expand(concat_reduced(u, v), q) == eu.multiplied(ev);
    bool inv = magnus_expand(inverse(u), q) == inverse_of(eu);
    bool cancel = magnus_expand(concat_reduced(u, inverse(u)), q) == TruncatedSeries::one(q);
    record(r, hom && inv && cancel,
           "magnus id=" + pad2(i) + " gens=" + std::to_string(gens) +
               " letters=" + std::to_string(letters) + " q=" + std::to_string(q));
  }

  for (const std::string& name : named_fixtures()) {
    LinkDiagram d = as_link(name);
    std::vector<int> index;
    if (d.m() == 1) index = {1, 1};
    else if (d.m() == 2) index = {1, 2};
    else index = {1, 2, 3};
    int q = static_cast<int>(index.size());
    MuResult lo = MilnorCalculator(d, q).evaluate(index);
    MuResult hi = MilnorCalculator(d, q + 2).evaluate(index);
    bool stable = lo.value == hi.value && lo.delta == hi.delta && lo.mubar == hi.mubar;
    record(r, stable, "truncation name=" + name + " I=" + index_digits(index));
  }
  return r;
}

SuiteResult verify_oracle(unsigned long long seed) {
  SuiteResult r;
  r.name = "oracle";
  std::mt19937_64 g = seeded(seed);

  std::vector<std::pair<std::string, LinkDiagram>> diagrams;
  for (const std::string& name : named_fixtures()) diagrams.emplace_back(name, as_link(name));
  for (int i = 0; i < 36; ++i) {
    diagrams.emplace_back("seeded-" + pad2(i), random_product(g));
  }

  for (const auto& [name, d] : diagrams) {
    if (d.m() < 2) continue;
    MilnorCalculator calc(d, 2);
    bool ok = true;
    int pairs = 0;
    for (int i = 0; i < d.m(); ++i) {
      for (int j = i + 1; j < d.m(); ++j) {
        long long lk = linking_number(d, i, j);
        ok = ok && calc.mu({i + 1, j + 1}) == lk && calc.mu({j + 1, i + 1}) == lk;
        ++pairs;
      }
    }
    record(r, ok, "oracle name=" + name + " pairs=" + std::to_string(pairs));
  }
  return r;
}

namespace {

struct AdditivityInstance {
  std::string host_name;
  std::string pattern_name;
  LinkDiagram host;
  StringLinkDiagram pattern;
  MultidiskSpec e;
  std::vector<int> index;
};

std::vector<AdditivityInstance> additivity_instances(unsigned long long seed) {
  std::vector<AdditivityInstance> out;

  LinkDiagram u2 = unlink(2);
  LinkDiagram u3 = unlink(3);
  Arc u2a = u2.components()[0].front(), u2b = u2.components()[1].front();
  Arc u3a = u3.components()[0].front(), u3b = u3.components()[1].front();
  Arc u3c = u3.components()[2].front();

  out.push_back({"unlink(2)", "clasp", u2, clasp(), simple_multidisk(u2), {1, 2}});

  MultidiskSpec crossed;
  crossed.subdisks = {{{u2a, 1}, {u2b, 1}, {u2b, -1}}, {{u2b, 1}}};
  out.push_back({"unlink(2)", "clasp", u2, clasp(), crossed, {1, 2}});

  out.push_back(
      {"unlink(3)", "borromean_sl", u3, borromean_strands(), simple_multidisk(u3), {1, 2, 3}});

  MultidiskSpec doubled;
  doubled.subdisks = {{{u3a, 1}, {u3a, 1}, {u3a, -1}}, {{u3b, 1}}, {{u3c, 1}}};
  out.push_back({"unlink(3)", "borromean_sl", u3, borromean_strands(), doubled, {1, 2, 3}});

  std::mt19937_64 g = seeded(seed);
  for (int k = 0; k < 16; ++k) {
    int m = k % 2 == 0 ? 2 : 3;
    LinkDiagram host = unlink(m);
    StringLinkDiagram pattern = random_string_link(g, m, 6);
    MultidiskSpec e = random_respecting_multidisk(g, host, 3);
    FirstNonVanishing first = first_nonvanishing(closure(pattern), 3);
    std::vector<int> index = first.length != 0 ? first.values.front().first
                                               : std::vector<int>{1, 2};
    out.push_back({"unlink(" + std::to_string(m) + ")", "seeded", std::move(host),
                   std::move(pattern), std::move(e), std::move(index)});
  }
  return out;
}

}  // namespace

SuiteResult verify_additivity_suite(unsigned long long seed) {
  SuiteResult r;
  r.name = "additivity";
  int id = 0;
  for (const AdditivityInstance& inst : additivity_instances(seed)) {
    ++id;
    std::string tag = "id=" + pad2(id) + " L=" + inst.host_name + " J=" + inst.pattern_name +
                      " I=" + index_digits(inst.index);
    AdditivityReport a = verify_additivity(inst.host, inst.pattern, inst.e, inst.index);
    record(r, a.applicable && a.pass,
           "additivity " + tag + " infected=" + std::to_string(a.infected) +
               " host=" + std::to_string(a.host) + " pattern=" + std::to_string(a.pattern));
    CabledSumReport c = cabled_sum_check(inst.host, inst.pattern, inst.e, inst.index);
    record(r, c.applicable && c.pass,
           "cabled " + tag + " sum=" + std::to_string(c.sum) +
               " expected=" + std::to_string(c.expected) +
               " product=" + std::to_string(c.product) + " terms=" + std::to_string(c.terms));
  }
  return r;
}

SuiteResult verify_pairs(unsigned long long seed) {
  SuiteResult r;
  r.name = "pairs";
  (void)seed;  // the pair instances are fixed; seeding keeps the interface uniform

  struct CrossingCase {
    std::string id;
    LinkDiagram knot;
    int crossing;
    int twists;
  };
  std::vector<CrossingCase> changes;
  changes.push_back({"cc1", trefoil(), 0, 0});
  changes.push_back({"cc2", trefoil(), 1, 2});
  changes.push_back({"cc3", trefoil_sum(2), 0, 0});
  changes.push_back({"cc4", trefoil_sum(3), 2, 0});
  changes.push_back({"cc5", figure_eight(), 0, 0});
  changes.push_back({"cc6", braid_closure(2, {1}), 0, 0});
  for (const CrossingCase& c : changes) {
    ConcordancePairReport rep =
        crossing_change_recipe(open_knot(c.knot), c.crossing, c.twists);
    record(r, rep.verdict(), "pair id=" + c.id + " recipe=crossing_change" +
                                 " profile=" + pair_line(rep).substr(13));
  }

  std::vector<std::pair<std::string, StringLinkDiagram>> shakes = {
      {"ss1", trivial_string_link(1)},
      {"ss2", open_knot(trefoil())},
      {"ss3", open_knot(figure_eight())},
  };
  for (const auto& [id, k] : shakes) {
    ConcordancePairReport rep = strong_shake_hopf_recipe(k);
    record(r, rep.verdict(),
           "pair id=" + id + " recipe=strong_shake profile=" + pair_line(rep).substr(13));
  }

  struct InfectionCase {
    std::string id;
    LinkDiagram host;
    StringLinkDiagram pattern;
    MultidiskSpec e;
  };
  LinkDiagram u2 = unlink(2);
  LinkDiagram u3 = unlink(3);
  Arc u2a = u2.components()[0].front(), u2b = u2.components()[1].front();
  Arc u3a = u3.components()[0].front();
  MultidiskSpec crossed;
  crossed.subdisks = {{{u2a, 1}, {u2b, 1}, {u2b, -1}}, {{u2b, 1}}};
  MultidiskSpec doubled;
  doubled.subdisks = {{{u3a, 1}, {u3a, 1}, {u3a, -1}},
                      {{u3.components()[1].front(), 1}},
                      {{u3.components()[2].front(), 1}}};
  std::vector<InfectionCase> infections;
  infections.push_back({"lm1", u2, clasp(), simple_multidisk(u2)});
  infections.push_back({"lm2", u2, clasp(), crossed});
  infections.push_back({"lm3", u3, borromean_strands(), simple_multidisk(u3)});
  infections.push_back({"lm4", u3, borromean_strands(), doubled});
  infections.push_back({"lm5", u2, trivial_string_link(2), simple_multidisk(u2)});
  for (const InfectionCase& c : infections) {
    ConcordancePairReport rep = lemma41_recipe(c.host, c.pattern, c.e);
    record(r, rep.verdict(),
           "pair id=" + c.id + " recipe=infection profile=" + pair_line(rep).substr(13));
  }
  return r;
}

std::vector<SuiteResult> verify_all(unsigned long long seed) {
  return {verify_magnus(seed), verify_oracle(seed), verify_additivity_suite(seed),
          verify_pairs(seed)};
}

}  // namespace shakelink
