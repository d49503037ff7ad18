#include "shakelink/recipes.hpp"

#include <map>
#include <utility>

#include "shakelink/fixtures.hpp"

namespace shakelink {

std::vector<int> pairwise_linking(const LinkDiagram& d) {
  std::vector<int> out;
  for (int i = 0; i < d.m(); ++i) {
    for (int j = i + 1; j < d.m(); ++j) out.push_back(linking_number(d, i, j));
  }
  return out;
}

void compare_endpoints(ConcordancePairReport& r, int max_length) {
  if (r.before.m() != r.after.m()) {
    throw DiagramError("endpoint comparison needs equal component counts");
  }
  r.lk_before = pairwise_linking(r.before);
  r.lk_after = pairwise_linking(r.after);
  r.first_before = first_nonvanishing(r.before, max_length);
  r.first_after = first_nonvanishing(r.after, max_length);
  r.linking_agrees = r.lk_before == r.lk_after;
  r.first_agrees = r.first_before == r.first_after;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void side_lines(std::vector<std::string>& out, const std::string& side, const LinkDiagram& d,
                const std::vector<int>& lks, const FirstNonVanishing& first) {
  std::size_t at = 0;
  for (int i = 0; i < d.m(); ++i) {
    for (int j = i + 1; j < d.m(); ++j) {
      out.push_back(side + " lk i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                    " value=" + std::to_string(lks[at++]));
    }
  }
  if (first.length == 0) {
    out.push_back(side + " mu none");
    return;
  }
  MilnorCalculator calc(d, first.length);
  for (const auto& [index, value] : first.values) {
    out.push_back(side + " " + mu_line(index_digits(index), calc.evaluate(index)));
  }
}

}  // namespace

std::string pair_line(const ConcordancePairReport& r) {
  return "pair profile=" + join_ints(r.profile_before) + ";" + join_ints(r.profile_after) +
         " verdict=" + (r.verdict() ? "pass" : "fail");
}

std::vector<std::string> report_lines(const ConcordancePairReport& r) {
  std::vector<std::string> out;
  out.push_back(pair_line(r));
  side_lines(out, "before", r.before, r.lk_before, r.first_before);
  side_lines(out, "after", r.after, r.lk_after, r.first_after);
  return out;
}

ConcordancePairReport crossing_change_recipe(const StringLinkDiagram& k, int crossing,
                                             int half_twists) {
  if (k.m() != 1) throw DiagramError("crossing change needs a one strand pattern");
  if (crossing < 0 || crossing >= static_cast<int>(k.crossings().size())) {
    throw DiagramError("crossing id out of range");
  }

  LinkDiagram knot = closure(k);
  LinkDiagram hk = add_meridian(knot, knot.crossings()[crossing].in_under(), 1);

  CableResult shaken = r_shaking(hk, {CopyPattern{{1}}, CopyPattern{{1, 1, -1}}}, 0);
  Arc merid0 = hk.components()[1].front();
  Arc copy2 = shaken.copy_arc.at({merid0, 2});
  Arc copy3 = shaken.copy_arc.at({merid0, 3});

  // Band the knot to the reversed outer copy, with the optional half twists,
  // then flat to the second copy; the first copy is the surviving meridian.
  BandSpec first_band;
  first_band.end1 = shaken.diagram.components()[0].front();
  first_band.end2 = copy3;
  first_band.side2 = half_twists % 2 == 0 ? Side::right : Side::left;
  first_band.half_twists = half_twists;
  LinkDiagram once = band_sum(shaken.diagram, first_band);

  BandSpec second_band;
  second_band.end1 = once.components()[0].front();
  second_band.end2 = copy2;
  LinkDiagram result = band_sum(once, second_band);

  ConcordancePairReport rep;
  rep.before = hk;
  rep.after = result;
  rep.profile_before = {1, 3};
  rep.profile_after = {1, 1};
  compare_endpoints(rep);

  std::vector<Crossing> cs = k.crossings();
  const Crossing& x = cs[crossing];
  cs[crossing] = Crossing::from_tuple(x.in_over(), x.out_over(), x.in_under(), x.out_under(),
                                      -x.sign);
  LinkDiagram changed = closure(StringLinkDiagram::make(std::move(cs), k.bottom(), k.top()));
  LinkDiagram companion = add_meridian(changed, changed.crossings()[crossing].in_under(), 1);
  rep.matches_companion = rep.lk_after == pairwise_linking(companion) &&
                          rep.first_after == first_nonvanishing(companion, 4);
  return rep;
}

ConcordancePairReport strong_shake_hopf_recipe(const StringLinkDiagram& k) {
  if (k.m() != 1) throw DiagramError("strong shake pattern needs one strand");

  LinkDiagram base = hopf();
  CableResult s = r_shaking(base, {CopyPattern{{1, 1, -1}}, CopyPattern{{1}}}, 0);
  Arc a0 = base.components()[0].front();
  Arc b0 = base.components()[0].back();
  Arc pass2 = s.copy_arc.at({a0, 2});
  Arc pass3 = s.copy_arc.at({a0, 3});
  Arc end1 = s.copy_arc.at({b0, 1});
  Arc end2 = s.copy_arc.at({b0, 2});
  Arc end3 = s.copy_arc.at({b0, 3});

  // The second and third copies run through the pattern with opposite
  // orientations; the other subdisks are placeholders for the trivial
  // pattern strands and are never cut.
  MultidiskSpec e;
  e.subdisks.push_back({{pass2, 1}, {pass3, -1}});
  for (int j = 1; j < 4; ++j) {
    e.subdisks.push_back({{s.diagram.components()[j].front(), 1}});
  }
  InfectResult inf = infect(s.diagram, e, side_by_side(k, trivial_string_link(3)));

  BandSpec outer;
  outer.end1 = end2;
  outer.end2 = end3;
  LinkDiagram joined = band_sum(inf.diagram, outer);
  BandSpec inner;
  inner.end1 = end1;
  inner.end2 = end2;
  LinkDiagram constructed = band_sum(joined, inner);

  ConcordancePairReport rep;
  rep.before = constructed;
  rep.after = base;
  rep.profile_before = {1, 1};
  rep.profile_after = {3, 1};
  compare_endpoints(rep);

  LinkDiagram companion = finger_link(k);
  rep.matches_companion = rep.lk_before == pairwise_linking(companion) &&
                          rep.first_before == first_nonvanishing(companion, 4);
  return rep;
}

ConcordancePairReport lemma41_recipe(const LinkDiagram& s, const StringLinkDiagram& j,
                                     const MultidiskSpec& e) {
  if (!respects(s, e)) throw DiagramError("multidisk does not respect the host");

  InfectResult inf = infect(s, e, j);
  LinkDiagram jhat = closure(j);

  std::vector<CopyPattern> patterns;
  std::vector<int> counts;
  int total = 0;
  for (const auto& disk : e.subdisks) {
    CopyPattern p;
    for (const Passage& pass : disk) p.signs.push_back(pass.sign);
    counts.push_back(static_cast<int>(disk.size()));
    total += static_cast<int>(disk.size());
    patterns.push_back(std::move(p));
  }
  CableResult witness = r_shaking(jhat, patterns, 0);
  if (witness.diagram.m() != total) throw DiagramError("shaking witness malformed");

  ConcordancePairReport rep;
  rep.before = inf.diagram;
  rep.after = jhat;
  rep.profile_before.assign(s.m(), 1);
  rep.profile_after = counts;
  compare_endpoints(rep);
  return rep;
}

namespace {

bool vanishes_below(const LinkDiagram& d, int length) {
  return first_nonvanishing(d, length - 1).length == 0;
}

}  // namespace

AdditivityReport verify_additivity(const LinkDiagram& l, const StringLinkDiagram& j,
                                   const MultidiskSpec& e, const std::vector<int>& index) {
  AdditivityReport rep;
  int len = static_cast<int>(index.size());
  if (j.m() != l.m() || !respects(l, e)) return rep;
  LinkDiagram jhat = closure(j);
  if (!vanishes_below(l, len) || !vanishes_below(jhat, len)) return rep;
  rep.applicable = true;

  LinkDiagram inf = infect(l, e, j).diagram;
  rep.host = MilnorCalculator(l, len).mu(index);
  rep.pattern = MilnorCalculator(jhat, len).mu(index);
  rep.infected = MilnorCalculator(inf, len).mu(index);
  rep.infected_clean = vanishes_below(inf, len);
  rep.pass = rep.infected == rep.host + rep.pattern && rep.infected_clean;
  return rep;
}

CabledSumReport cabled_sum_check(const LinkDiagram& l, const StringLinkDiagram& j,
                                 const MultidiskSpec& e, const std::vector<int>& index) {
  CabledSumReport rep;
  int len = static_cast<int>(index.size());
  if (j.m() != l.m() || !respects(l, e)) return rep;
  LinkDiagram jhat = closure(j);
  if (!vanishes_below(l, len) || !vanishes_below(jhat, len)) return rep;
  rep.applicable = true;

  LinkDiagram inf = infect(l, e, j).diagram;
  long long host = MilnorCalculator(l, len).mu(index);
  long long infected = MilnorCalculator(inf, len).mu(index);
  rep.expected = infected - host;

  std::vector<CopyPattern> patterns;
  for (const auto& disk : e.subdisks) {
    CopyPattern p;
    for (const Passage& pass : disk) p.signs.push_back(pass.sign);
    patterns.push_back(std::move(p));
  }
  StringCableResult cabled = cable_string_link(j, patterns, e.framings);
  LinkDiagram cabled_hat = closure(cabled.diagram);
  MilnorCalculator calc(cabled_hat, len);

  // Every index of the cabled closure collapsing onto the requested one,
  // walked odometer style over the per-position copy choices.
  std::vector<std::vector<int>> choices;
  for (int entry : index) {
    std::vector<int> c;
    for (int strand : cabled.copy_strand[entry - 1]) c.push_back(strand + 1);
    choices.push_back(std::move(c));
  }
  std::vector<std::size_t> at(choices.size(), 0);
  while (true) {
    std::vector<int> iprime;
    for (std::size_t p = 0; p < choices.size(); ++p) iprime.push_back(choices[p][at[p]]);
    rep.sum += calc.mu(iprime);
    ++rep.terms;
    std::size_t p = 0;
    while (p < at.size() && ++at[p] == choices[p].size()) at[p++] = 0;
    if (p == at.size()) break;
  }

  std::map<int, int> multiplicity;
  for (int entry : index) ++multiplicity[entry];
  for (const auto& [entry, count] : multiplicity) {
    long long net = 0;
    for (const Passage& pass : e.subdisks[entry - 1]) {
      if (l.component_of(pass.arc) == entry - 1) net += pass.sign;
    }
    for (int t = 0; t < count; ++t) rep.product *= net;
  }

  rep.pass = rep.sum == rep.expected && rep.product == 1;
  return rep;
}

}  // namespace shakelink
