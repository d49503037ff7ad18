#include "shakelink/ops.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace shakelink {

namespace {

void replace_arc(std::vector<Crossing>& cs, Arc from, Arc to) {
  for (Crossing& c : cs) {
    for (Arc& a : c.cyclic) {
      if (a == from) a = to;
    }
  }
}

std::vector<Arc> first_arcs(const LinkDiagram& d) {
  std::vector<Arc> reps;
  for (const auto& comp : d.components()) reps.push_back(comp.front());
  return reps;
}

// Rewrites the in-slot of the unique crossing in cs[0..limit) consuming `a`.
void rewrite_consumer(std::vector<Crossing>& cs, std::size_t limit, Arc a, Arc to) {
  for (std::size_t i = 0; i < limit; ++i) {
    Crossing& c = cs[i];
    if (c.in_under() == a) {
      c.cyclic[c.under_in] = to;
      return;
    }
    if (c.in_over() == a) {
      c.cyclic[c.over_in] = to;
      return;
    }
  }
  throw DiagramError("arc " + std::to_string(a) + " has no consuming crossing");
}

// Cuts arcs into chains of segments as new crossings are threaded onto them.
// live() names the current tail of an arc, advance() starts a new segment.
// finish() reconnects each tail: to the arc's original consumer, or back to
// the arc itself for crossing-free circles.
class ArcCutter {
 public:
  ArcCutter(std::vector<Crossing>& cs, std::vector<Arc>& lone, std::size_t consumer_limit,
            Arc first_fresh)
      : cs_(cs), lone_(lone), consumer_limit_(consumer_limit), next_(first_fresh) {}

  Arc fresh() { return next_++; }

  Arc live(Arc a) const {
    auto it = live_.find(a);
    return it == live_.end() ? a : it->second;
  }

  Arc advance(Arc a) {
    Arc f = next_++;
    live_[a] = f;
    return f;
  }

  void finish() {
    for (const auto& [a, tail] : live_) {
      auto lone_it = std::find(lone_.begin(), lone_.end(), a);
      if (lone_it != lone_.end()) {
        replace_arc(cs_, tail, a);
        lone_.erase(lone_it);
      } else {
        rewrite_consumer(cs_, consumer_limit_, a, tail);
      }
    }
  }

 private:
  std::vector<Crossing>& cs_;
  std::vector<Arc>& lone_;
  std::size_t consumer_limit_;
  Arc next_;
  std::map<Arc, Arc> live_;
};

}  // namespace

LinkDiagram closure(const StringLinkDiagram& s) {
  std::vector<Crossing> cs = s.crossings();
  std::vector<Arc> lone;
  std::vector<Arc> reps;
  for (int i = 0; i < s.m(); ++i) {
    Arc b = s.bottom()[i];
    Arc t = s.top()[i];
    if (b == t) {
      lone.push_back(b);
    } else {
      replace_arc(cs, t, b);
    }
    reps.push_back(b);
  }
  return LinkDiagram::make_ordered(std::move(cs), std::move(lone), reps);
}

StringLinkDiagram open_knot(const LinkDiagram& knot) {
  if (knot.m() != 1) throw DiagramError("only one component diagrams can be opened");
  Arc a0 = knot.components()[0].front();
  std::vector<Crossing> cs = knot.crossings();
  if (cs.empty()) {
    return StringLinkDiagram::make(std::move(cs), {a0}, {a0});
  }
  Arc bottom = knot.max_arc() + 1;
  rewrite_consumer(cs, cs.size(), a0, bottom);
  return StringLinkDiagram::make(std::move(cs), {bottom}, {a0});
}

LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b) {
  Arc shift = a.max_arc();
  std::vector<Crossing> cs = a.crossings();
  for (Crossing c : b.crossings()) {
    for (Arc& x : c.cyclic) x += shift;
    cs.push_back(c);
  }
  std::vector<Arc> lone = a.lone_arcs();
  for (Arc x : b.lone_arcs()) lone.push_back(x + shift);
  std::vector<Arc> reps = first_arcs(a);
  for (const auto& comp : b.components()) reps.push_back(comp.front() + shift);
  return LinkDiagram::make_ordered(std::move(cs), std::move(lone), reps);
}

StringLinkDiagram compose(const StringLinkDiagram& lower, const StringLinkDiagram& upper) {
  if (lower.m() != upper.m()) throw DiagramError("strand counts differ");
  if (lower.flows_up() != upper.flows_up()) {
    throw DiagramError("strand directions do not match at the interface");
  }
  Arc shift = lower.max_arc();
  std::vector<Crossing> cs = lower.crossings();
  for (Crossing c : upper.crossings()) {
    for (Arc& x : c.cyclic) x += shift;
    cs.push_back(c);
  }
  std::vector<Arc> bottom = lower.bottom();
  std::vector<Arc> top;
  for (Arc t : upper.top()) top.push_back(t + shift);

  for (int i = 0; i < lower.m(); ++i) {
    Arc lo_top = lower.top()[i];
    Arc up_bottom = upper.bottom()[i] + shift;
    if (lower.flows_up()[i]) {
      // flow crosses the interface from lo_top into up_bottom
      replace_arc(cs, up_bottom, lo_top);
      if (top[i] == up_bottom) top[i] = lo_top;
    } else {
      replace_arc(cs, lo_top, up_bottom);
      if (bottom[i] == lo_top) bottom[i] = up_bottom;
    }
  }
  return StringLinkDiagram::make(std::move(cs), std::move(bottom), std::move(top));
}

StringLinkDiagram side_by_side(const StringLinkDiagram& left, const StringLinkDiagram& right) {
  Arc shift = left.max_arc();
  std::vector<Crossing> cs = left.crossings();
  for (Crossing c : right.crossings()) {
    for (Arc& x : c.cyclic) x += shift;
    cs.push_back(c);
  }
  std::vector<Arc> bottom = left.bottom();
  std::vector<Arc> top = left.top();
  for (Arc b : right.bottom()) bottom.push_back(b + shift);
  for (Arc t : right.top()) top.push_back(t + shift);
  return StringLinkDiagram::make(std::move(cs), std::move(bottom), std::move(top));
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (Crossing& c : cs) {
    std::swap(c.under_in, c.over_in);
    c.sign = -c.sign;
  }
  return LinkDiagram::make_ordered(std::move(cs), d.lone_arcs(), first_arcs(d));
}

namespace {

// Flips flow through every crossing slot whose arc lies in `arcs`.
void reverse_arc_set(std::vector<Crossing>& cs, const std::set<Arc>& arcs) {
  for (Crossing& c : cs) {
    if (arcs.count(c.in_under())) c.under_in = (c.under_in + 2) % 4;
    if (arcs.count(c.in_over())) c.over_in = (c.over_in + 2) % 4;
    c.sign = c.computed_sign();
  }
}

}  // namespace

LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
  if (comp < 0 || comp >= d.m()) throw DiagramError("component index out of range");
  std::set<Arc> arcs(d.components()[comp].begin(), d.components()[comp].end());
  std::vector<Crossing> cs = d.crossings();
  reverse_arc_set(cs, arcs);
  return LinkDiagram::make_ordered(std::move(cs), d.lone_arcs(), first_arcs(d));
}

LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& comps) {
  std::vector<bool> keep(d.m(), false);
  for (int i : comps) {
    if (i < 0 || i >= d.m()) throw DiagramError("component index out of range");
    if (keep[i]) throw DiagramError("component listed twice");
    keep[i] = true;
  }

  // Arcs separated only by crossings with removed components merge; union by
  // smaller root so each class keeps its smallest label.
  std::map<Arc, Arc> parent;
  auto find = [&parent](Arc a) {
    while (true) {
      auto it = parent.find(a);
      if (it == parent.end()) return a;
      a = it->second;
    }
  };
  auto unite = [&](Arc a, Arc b) {
    Arc ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (ra > rb) std::swap(ra, rb);
    parent[rb] = ra;
  };

  std::vector<Crossing> cs;
  for (const Crossing& c : d.crossings()) {
    bool ku = keep[d.component_of(c.in_under())];
    bool ko = keep[d.component_of(c.in_over())];
    if (ku && ko) {
      cs.push_back(c);
    } else if (ku) {
      unite(c.in_under(), c.out_under());
    } else if (ko) {
      unite(c.in_over(), c.out_over());
    }
  }
  for (Crossing& c : cs) {
    for (Arc& a : c.cyclic) a = find(a);
  }

  std::set<Arc> used;
  for (const Crossing& c : cs) {
    for (Arc a : c.cyclic) used.insert(a);
  }
  std::vector<Arc> lone;
  std::vector<Arc> reps;
  for (int i : comps) {
    Arc rep = find(d.components()[i].front());
    if (!used.count(rep)) lone.push_back(rep);
    reps.push_back(rep);
  }
  return LinkDiagram::make_ordered(std::move(cs), std::move(lone), reps);
}

LinkDiagram permute_components(const LinkDiagram& d, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != d.m()) throw DiagramError("order must list every component");
  std::vector<bool> seen(d.m(), false);
  std::vector<Arc> reps;
  for (int i : order) {
    if (i < 0 || i >= d.m() || seen[i]) throw DiagramError("order is not a permutation");
    seen[i] = true;
    reps.push_back(d.components()[i].front());
  }
  return LinkDiagram::make_ordered(d.crossings(), d.lone_arcs(), reps);
}

LinkDiagram add_meridian(const LinkDiagram& d, Arc around, int sign) {
  if (!d.has_arc(around)) throw DiagramError("unknown arc " + std::to_string(around));
  if (sign != 1 && sign != -1) throw DiagramError("meridian sign must be +1 or -1");
  Arc mx = d.max_arc();
  Arc mid = mx + 1, m1 = mx + 2, m2 = mx + 3;
  std::vector<Crossing> cs = d.crossings();
  std::vector<Arc> lone = d.lone_arcs();
  Arc out;
  auto lone_it = std::find(lone.begin(), lone.end(), around);
  if (lone_it != lone.end()) {
    out = around;
    lone.erase(lone_it);
  } else {
    out = mx + 4;
    rewrite_consumer(cs, cs.size(), around, out);
  }
  cs.push_back(Crossing::from_tuple(around, mid, m1, m2, sign));
  cs.push_back(Crossing::from_tuple(m2, m1, mid, out, sign));
  std::vector<Arc> reps = first_arcs(d);
  reps.push_back(m1);
  return LinkDiagram::make_ordered(std::move(cs), std::move(lone), reps);
}

int linking_number(const LinkDiagram& d, int i, int j) {
  if (i < 0 || i >= d.m() || j < 0 || j >= d.m() || i == j) {
    throw DiagramError("linking number needs two distinct components");
  }
  int sum = 0;
  for (const Crossing& c : d.crossings()) {
    int cu = d.component_of(c.in_under());
    int co = d.component_of(c.in_over());
    if ((cu == i && co == j) || (cu == j && co == i)) sum += c.sign;
  }
  return sum / 2;
}

// ---- cabling ---------------------------------------------------------------

namespace {

struct CableState {
  std::map<std::pair<Arc, int>, Arc> base;  // (arc, copy) -> first segment label
  std::map<std::pair<Arc, int>, Arc> live;  // (arc, copy) -> current tail label
  Arc next = 0;
};

// Emits |twists| full twists on the c copies of arc a0, consuming the
// current labels. Positive twists sweep the generators left to right, with
// the strand moving rightward on top.
void emit_full_twists(std::vector<Crossing>& cs, CableState& st, Arc a0, int c, int twists) {
  if (c < 2 || twists == 0) return;
  std::vector<Arc> cur(c + 1);
  for (int p = 1; p <= c; ++p) cur[p] = st.live[{a0, p}];
  int sweeps = std::abs(twists) * c;
  for (int rep = 0; rep < sweeps; ++rep) {
    if (twists > 0) {
      for (int k = 1; k <= c - 1; ++k) {
        Arc u2 = st.next++, o2 = st.next++;
        cs.push_back(Crossing::from_tuple(cur[k + 1], u2, cur[k], o2, 1));
        cur[k] = u2;
        cur[k + 1] = o2;
      }
    } else {
      for (int k = c - 1; k >= 1; --k) {
        Arc u2 = st.next++, o2 = st.next++;
        cs.push_back(Crossing::from_tuple(cur[k], u2, cur[k + 1], o2, -1));
        cur[k] = o2;
        cur[k + 1] = u2;
      }
    }
  }
  for (int p = 1; p <= c; ++p) st.live[{a0, p}] = cur[p];
}

// Replaces one original crossing by the full grid of copy crossings. The
// copy bands stay parallel to the originals, so every grid crossing keeps
// the original sign; meeting orders follow from the plane geometry of two
// bands crossing.
void emit_block(std::vector<Crossing>& cs, CableState& st, const Crossing& x, int c_under,
                int c_over) {
  Arc u_in = x.in_under(), u_out = x.out_under();
  Arc o_in = x.in_over(), o_out = x.out_over();
  int sigma = x.sign;
  auto emit = [&](int s, int t) {
    bool last_for_s = (sigma == 1) ? t == 1 : t == c_over;
    bool last_for_t = (sigma == 1) ? s == c_under : s == 1;
    Arc ui = st.live[{u_in, s}];
    Arc uo = last_for_s ? st.base[{u_out, s}] : st.next++;
    st.live[{u_in, s}] = uo;
    Arc oi = st.live[{o_in, t}];
    Arc oo = last_for_t ? st.base[{o_out, t}] : st.next++;
    st.live[{o_in, t}] = oo;
    cs.push_back(Crossing::from_tuple(ui, uo, oi, oo, sigma));
  };
  if (sigma == 1) {
    for (int t = c_over; t >= 1; --t) {
      for (int s = 1; s <= c_under; ++s) emit(s, t);
    }
  } else {
    for (int t = 1; t <= c_over; ++t) {
      for (int s = c_under; s >= 1; --s) emit(s, t);
    }
  }
}

void check_patterns(const std::vector<CopyPattern>& patterns, int m,
                    const std::vector<int>& twists) {
  if (static_cast<int>(patterns.size()) != m) {
    throw DiagramError("need one copy pattern per component");
  }
  if (static_cast<int>(twists.size()) != m) {
    throw DiagramError("need one twist count per component");
  }
  for (const CopyPattern& p : patterns) {
    if (p.signs.empty()) throw DiagramError("copy patterns need at least one copy");
    for (int s : p.signs) {
      if (s != 1 && s != -1) throw DiagramError("copy orientations must be +1 or -1");
    }
  }
}

}  // namespace

CableResult cable_all(const LinkDiagram& d, const std::vector<CopyPattern>& patterns,
                      const std::vector<int>& full_twists) {
  int m = d.m();
  check_patterns(patterns, m, full_twists);

  CableState st;
  st.next = d.max_arc() + 1;
  for (int i = 0; i < m; ++i) {
    int c = static_cast<int>(patterns[i].signs.size());
    for (Arc a : d.components()[i]) {
      for (int t = 1; t <= c; ++t) st.base[{a, t}] = (c == 1) ? a : st.next++;
    }
  }
  st.live = st.base;

  std::vector<Crossing> cs;
  std::vector<Arc> lone;
  std::set<Arc> lone_set(d.lone_arcs().begin(), d.lone_arcs().end());

  // Twist bundles sit at each component's first arc, right after its producer.
  for (int i = 0; i < m; ++i) {
    int c = static_cast<int>(patterns[i].signs.size());
    Arc a0 = d.components()[i].front();
    bool is_lone = lone_set.count(a0) != 0;
    if (c >= 2 && full_twists[i] != 0) {
      emit_full_twists(cs, st, a0, c, full_twists[i]);
      if (is_lone) {
        // close each copy circle back through the braid
        for (int t = 1; t <= c; ++t) {
          replace_arc(cs, st.live[{a0, t}], st.base[{a0, t}]);
          st.live[{a0, t}] = st.base[{a0, t}];
        }
      }
    } else if (is_lone) {
      for (int t = 1; t <= c; ++t) lone.push_back(st.base[{a0, t}]);
    }
  }

  for (const Crossing& x : d.crossings()) {
    int c_under = static_cast<int>(patterns[d.component_of(x.in_under())].signs.size());
    int c_over = static_cast<int>(patterns[d.component_of(x.in_over())].signs.size());
    emit_block(cs, st, x, c_under, c_over);
  }

  CableResult res;
  res.copy_arc = st.base;
  std::vector<Arc> reps;
  int index = 0;
  res.copy_component.resize(m);
  for (int i = 0; i < m; ++i) {
    int c = static_cast<int>(patterns[i].signs.size());
    Arc a0 = d.components()[i].front();
    for (int t = 1; t <= c; ++t) {
      reps.push_back(st.base[{a0, t}]);
      res.copy_component[i].push_back(index++);
    }
  }
  res.diagram = LinkDiagram::make_ordered(std::move(cs), std::move(lone), reps);

  for (int i = 0; i < m; ++i) {
    for (std::size_t t = 0; t < patterns[i].signs.size(); ++t) {
      if (patterns[i].signs[t] == -1) {
        res.diagram = reverse_component(res.diagram, res.copy_component[i][t]);
      }
    }
  }
  return res;
}

CableResult cable_component(const LinkDiagram& d, int comp, const CopyPattern& pattern,
                            int full_twists) {
  if (comp < 0 || comp >= d.m()) throw DiagramError("component index out of range");
  std::vector<CopyPattern> patterns(d.m(), CopyPattern{{1}});
  std::vector<int> twists(d.m(), 0);
  patterns[comp] = pattern;
  twists[comp] = full_twists;
  return cable_all(d, patterns, twists);
}

CableResult r_shaking(const LinkDiagram& d, const std::vector<CopyPattern>& patterns, int r) {
  std::vector<int> twists;
  for (int i = 0; i < d.m(); ++i) twists.push_back(r - d.self_writhe(i));
  return cable_all(d, patterns, twists);
}

namespace {

StringLinkDiagram reverse_strand(const StringLinkDiagram& s, int strand) {
  std::set<Arc> arcs(s.strands()[strand].begin(), s.strands()[strand].end());
  std::vector<Crossing> cs = s.crossings();
  reverse_arc_set(cs, arcs);
  return StringLinkDiagram::make(std::move(cs), s.bottom(), s.top());
}

}  // namespace

StringCableResult cable_string_link(const StringLinkDiagram& s,
                                    const std::vector<CopyPattern>& patterns,
                                    const std::vector<int>& full_twists) {
  int m = s.m();
  std::vector<int> twists = full_twists.empty() ? std::vector<int>(m, 0) : full_twists;
  check_patterns(patterns, m, twists);

  CableState st;
  st.next = s.max_arc() + 1;
  for (int i = 0; i < m; ++i) {
    int c = static_cast<int>(patterns[i].signs.size());
    for (Arc a : s.strands()[i]) {
      for (int t = 1; t <= c; ++t) st.base[{a, t}] = (c == 1) ? a : st.next++;
    }
  }
  st.live = st.base;

  std::vector<Crossing> cs;
  for (int i = 0; i < m; ++i) {
    int c = static_cast<int>(patterns[i].signs.size());
    emit_full_twists(cs, st, s.strands()[i].front(), c, twists[i]);
  }
  for (const Crossing& x : s.crossings()) {
    int c_under = static_cast<int>(patterns[s.strand_of(x.in_under())].signs.size());
    int c_over = static_cast<int>(patterns[s.strand_of(x.in_over())].signs.size());
    emit_block(cs, st, x, c_under, c_over);
  }

  StringCableResult res;
  res.copy_arc = st.base;
  std::vector<Arc> bottom, top;
  int index = 0;
  res.copy_strand.resize(m);
  for (int i = 0; i < m; ++i) {
    int c = static_cast<int>(patterns[i].signs.size());
    Arc flow_start = s.strands()[i].front();
    Arc flow_end = s.strands()[i].back();
    for (int t = 1; t <= c; ++t) {
      Arc start = st.base[{flow_start, t}];
      Arc end = st.live[{flow_end, t}];
      bottom.push_back(s.flows_up()[i] ? start : end);
      top.push_back(s.flows_up()[i] ? end : start);
      res.copy_strand[i].push_back(index++);
    }
  }
  res.diagram = StringLinkDiagram::make(std::move(cs), std::move(bottom), std::move(top));

  for (int i = 0; i < m; ++i) {
    for (std::size_t t = 0; t < patterns[i].signs.size(); ++t) {
      if (patterns[i].signs[t] == -1) {
        res.diagram = reverse_strand(res.diagram, res.copy_strand[i][t]);
      }
    }
  }
  return res;
}

// ---- band sums -------------------------------------------------------------

LinkDiagram band_sum(const LinkDiagram& d, const BandSpec& band) {
  Arc e1 = band.end1, e2 = band.end2;
  if (!d.has_arc(e1) || !d.has_arc(e2)) throw DiagramError("band end arc not in diagram");
  int comp1 = d.component_of(e1);
  int comp2 = d.component_of(e2);
  if (comp1 == comp2) throw DiagramError("band ends must sit on distinct components");
  bool even_twists = band.half_twists % 2 == 0;
  if ((band.side1 == band.side2) != even_twists) {
    throw DiagramError("band attachment is not orientation coherent");
  }
  for (const RouteEntry& r : band.route) {
    if (!d.has_arc(r.arc)) throw DiagramError("band route arc not in diagram");
    if (r.arc == e1 || r.arc == e2) {
      throw DiagramError("band route may not cross its own end arcs");
    }
    if (r.sign != 1 && r.sign != -1) throw DiagramError("route signs must be +1 or -1");
  }

  std::vector<Crossing> cs = d.crossings();
  std::vector<Arc> lone = d.lone_arcs();
  std::size_t n_original = cs.size();
  ArcCutter cut(cs, lone, n_original, d.max_arc() + 1);

  int h = band.half_twists;
  int habs = std::abs(h);
  int n_route = static_cast<int>(band.route.size());
  int total = habs + n_route;

  auto drop_lone = [&lone](Arc a) {
    auto it = std::find(lone.begin(), lone.end(), a);
    if (it == lone.end()) return false;
    lone.erase(it);
    return true;
  };

  Arc fused_rep = e1;
  if (total == 0) {
    bool lone1 = drop_lone(e1);
    bool lone2 = drop_lone(e2);
    if (!lone1 && !lone2) {
      // exchange the consumers of the two arcs
      Arc tmp = d.max_arc() + 1;
      rewrite_consumer(cs, n_original, e1, tmp);
      rewrite_consumer(cs, n_original, e2, e1);
      replace_arc(cs, tmp, e2);
    } else if (lone1 && lone2) {
      lone.push_back(e1);  // both circles fuse into one
    } else if (lone1) {
      // the circle is absorbed into the other component unchanged, and its
      // arc label disappears with it
      fused_rep = e2;
    }
    // lone2 case mirrors lone1: nothing further to do
  } else {
    // Edge chains: p runs from end1 through the twists then the route; q runs
    // from end2 back through the route then the twists.
    std::vector<Arc> p(total + 1), q(total + 1);
    p[0] = e1;
    q[0] = e2;
    for (int k = 1; k < total; ++k) {
      p[k] = cut.fresh();
      q[k] = cut.fresh();
    }
    if (drop_lone(e2)) {
      p[total] = e2;
    } else {
      p[total] = cut.fresh();
      rewrite_consumer(cs, n_original, e2, p[total]);
    }
    if (drop_lone(e1)) {
      q[total] = e1;
    } else {
      q[total] = cut.fresh();
      rewrite_consumer(cs, n_original, e1, q[total]);
    }

    // Half twist region at the end1 side: |h| crossings of one handedness,
    // the two edges alternating on top.
    int tw_sign = h > 0 ? -1 : 1;
    for (int k = 1; k <= habs; ++k) {
      Arc pi = p[k - 1], po = p[k];
      int qstep = total - k + 1;
      Arc qi = q[qstep - 1], qo = q[qstep];
      if (k % 2 == 1) {
        cs.push_back(Crossing::from_tuple(qi, qo, pi, po, tw_sign));
      } else {
        cs.push_back(Crossing::from_tuple(pi, po, qi, qo, tw_sign));
      }
    }

    // Past the twists the p edge sits on the core-right side exactly when it
    // started there and the twist count is even.
    bool p_is_right = (band.side1 == Side::right) == (habs % 2 == 0);
    for (int k = 1; k <= n_route; ++k) {
      const RouteEntry& r = band.route[k - 1];
      Arc pi = p[habs + k - 1], po = p[habs + k];
      int qstep = n_route - k + 1;
      Arc qi = q[qstep - 1], qo = q[qstep];
      bool right_first = r.over ? r.sign == 1 : r.sign == -1;
      bool p_first = right_first == p_is_right;
      struct EdgePass {
        Arc in, out;
        int sign;
      };
      EdgePass first = p_first ? EdgePass{pi, po, r.sign} : EdgePass{qi, qo, -r.sign};
      EdgePass second = p_first ? EdgePass{qi, qo, -r.sign} : EdgePass{pi, po, r.sign};
      for (const EdgePass& e : {first, second}) {
        Arc xi = cut.live(r.arc);
        Arc xo = cut.advance(r.arc);
        if (r.over) {
          cs.push_back(Crossing::from_tuple(xi, xo, e.in, e.out, e.sign));
        } else {
          cs.push_back(Crossing::from_tuple(e.in, e.out, xi, xo, e.sign));
        }
      }
    }
    cut.finish();
  }

  int lo = std::min(comp1, comp2), hi = std::max(comp1, comp2);
  std::vector<Arc> reps;
  for (int i = 0; i < d.m(); ++i) {
    if (i == hi) continue;
    reps.push_back(i == lo ? fused_rep : d.components()[i].front());
  }
  return LinkDiagram::make_ordered(std::move(cs), std::move(lone), reps);
}

// ---- infection -------------------------------------------------------------

namespace {

void check_multidisk(const LinkDiagram& d, const MultidiskSpec& e) {
  if (static_cast<int>(e.subdisks.size()) != d.m()) {
    throw DiagramError("need one subdisk per component");
  }
  if (!e.framings.empty() && e.framings.size() != e.subdisks.size()) {
    throw DiagramError("framings must match the subdisk count");
  }
  for (const auto& disk : e.subdisks) {
    if (disk.empty()) throw DiagramError("every subdisk needs at least one passage");
    for (const Passage& p : disk) {
      if (!d.has_arc(p.arc)) throw DiagramError("passage arc not in diagram");
      if (p.sign != 1 && p.sign != -1) throw DiagramError("passage signs must be +1 or -1");
    }
  }
}

}  // namespace

bool respects(const LinkDiagram& d, const MultidiskSpec& e) {
  check_multidisk(d, e);
  for (int j = 0; j < d.m(); ++j) {
    std::vector<int> alg(d.m(), 0);
    for (const Passage& p : e.subdisks[j]) alg[d.component_of(p.arc)] += p.sign;
    for (int i = 0; i < d.m(); ++i) {
      if (alg[i] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool strongly_respects(const LinkDiagram& d, const MultidiskSpec& e) {
  if (!respects(d, e)) return false;
  for (int j = 0; j < d.m(); ++j) {
    for (const Passage& p : e.subdisks[j]) {
      if (d.component_of(p.arc) != j) return false;
    }
  }
  return true;
}

InfectResult infect(const LinkDiagram& d, const MultidiskSpec& e,
                    const StringLinkDiagram& pattern) {
  check_multidisk(d, e);
  if (pattern.m() != d.m()) {
    throw DiagramError("pattern strand count must match the component count");
  }
  bool warning = !respects(d, e);

  std::vector<CopyPattern> patterns;
  for (const auto& disk : e.subdisks) {
    CopyPattern cp;
    for (const Passage& p : disk) cp.signs.push_back(p.sign);
    patterns.push_back(std::move(cp));
  }
  std::vector<int> framings = e.framings.empty()
                                  ? std::vector<int>(e.subdisks.size(), 0)
                                  : e.framings;
  StringCableResult cabled = cable_string_link(pattern, patterns, framings);
  const StringLinkDiagram& jd = cabled.diagram;

  Arc shift = d.max_arc();
  std::vector<Crossing> cs = d.crossings();
  std::size_t n_host = cs.size();
  for (Crossing c : jd.crossings()) {
    for (Arc& a : c.cyclic) a += shift;
    cs.push_back(c);
  }
  std::vector<Arc> lone = d.lone_arcs();
  ArcCutter cut(cs, lone, n_host, shift + jd.max_arc() + 1);

  for (std::size_t j = 0; j < e.subdisks.size(); ++j) {
    for (std::size_t t = 0; t < e.subdisks[j].size(); ++t) {
      const Passage& p = e.subdisks[j][t];
      int k = cabled.copy_strand[j][t];
      Arc entry = p.sign == 1 ? jd.bottom()[k] : jd.top()[k];
      Arc exit = p.sign == 1 ? jd.top()[k] : jd.bottom()[k];
      if (entry == exit) continue;  // crossing-free copy changes nothing
      Arc in = cut.live(p.arc);
      Arc out = cut.advance(p.arc);
      replace_arc(cs, entry + shift, in);
      replace_arc(cs, exit + shift, out);
    }
  }
  cut.finish();

  return {LinkDiagram::make_ordered(std::move(cs), std::move(lone), first_arcs(d)), warning};
}

}  // namespace shakelink
