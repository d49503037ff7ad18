#include "shakelink/diagram.hpp"

#include <algorithm>
#include <set>

namespace shakelink {

namespace {

std::string arc_str(Arc a) { return std::to_string(a); }

struct Occurrences {
  std::map<Arc, int> in_count;
  std::map<Arc, int> out_count;
  std::map<Arc, Arc> succ;  // meaningful when in_count == 1
};

Occurrences collect_occurrences(const std::vector<Crossing>& crossings) {
  Occurrences occ;
  for (const Crossing& c : crossings) {
    occ.in_count[c.in_under()]++;
    occ.out_count[c.out_under()]++;
    occ.in_count[c.in_over()]++;
    occ.out_count[c.out_over()]++;
    occ.succ[c.in_under()] = c.out_under();
    occ.succ[c.in_over()] = c.out_over();
  }
  return occ;
}

std::vector<ValidationIssue> crossing_issues(const std::vector<Crossing>& crossings) {
  std::vector<ValidationIssue> issues;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c = crossings[i];
    std::string at = "crossing " + std::to_string(i + 1);
    if (c.under_in < 0 || c.under_in > 3 || c.over_in < 0 || c.over_in > 3 ||
        (c.over_in - c.under_in) % 2 == 0) {
      issues.push_back({"crossing-structure", at + ": strand positions overlap"});
      continue;
    }
    for (Arc a : c.cyclic) {
      if (a <= 0) {
        issues.push_back({"arc-label", at + ": arc labels must be positive"});
        break;
      }
    }
    if (c.sign != 1 && c.sign != -1) {
      issues.push_back({"sign-value", at + ": sign must be +1 or -1"});
    } else if (c.sign != c.computed_sign()) {
      issues.push_back({"sign-mismatch",
                        at + ": stored sign " + std::to_string(c.sign) +
                            " disagrees with orientation-derived sign " +
                            std::to_string(c.computed_sign())});
    }
  }
  return issues;
}

}  // namespace

Crossing Crossing::from_tuple(Arc in_under, Arc out_under, Arc in_over, Arc out_over, int sign) {
  if (sign != 1 && sign != -1) throw DiagramError("crossing sign must be +1 or -1");
  Crossing c;
  c.under_in = 0;
  c.cyclic[0] = in_under;
  c.cyclic[2] = out_under;
  if (sign == 1) {
    c.over_in = 3;
    c.cyclic[3] = in_over;
    c.cyclic[1] = out_over;
  } else {
    c.over_in = 1;
    c.cyclic[1] = in_over;
    c.cyclic[3] = out_over;
  }
  c.sign = sign;
  return c;
}

Traversal trace_arcs(const std::vector<Crossing>& crossings, const std::vector<Arc>& lone_arcs,
                     const std::vector<Arc>& chain_starts) {
  Traversal t;
  Occurrences occ = collect_occurrences(crossings);

  std::set<Arc> all_arcs;
  for (const auto& [a, n] : occ.in_count) all_arcs.insert(a);
  for (const auto& [a, n] : occ.out_count) all_arcs.insert(a);

  for (Arc a : all_arcs) {
    int in = occ.in_count.count(a) ? occ.in_count.at(a) : 0;
    int out = occ.out_count.count(a) ? occ.out_count.at(a) : 0;
    if (in + out > 2) {
      t.issues.push_back({"arc-degree", "arc " + arc_str(a) + " occurs " +
                                            std::to_string(in + out) + " times in crossings"});
    } else if (in > 1 || out > 1) {
      t.issues.push_back({"orientation", "arc " + arc_str(a) + " has inconsistent orientation (" +
                                             std::to_string(in) + " incoming, " +
                                             std::to_string(out) + " outgoing ends)"});
    }
  }
  if (!t.issues.empty()) return t;

  std::set<Arc> visited;
  auto follow_chain = [&](Arc start) {
    std::vector<Arc> path{start};
    visited.insert(start);
    Arc cur = start;
    while (occ.succ.count(cur)) {
      Arc next = occ.succ.at(cur);
      if (next == start) return std::pair{path, true};  // closed cycle
      if (visited.count(next)) {
        t.issues.push_back({"orientation", "arc " + arc_str(next) + " reached twice"});
        return std::pair{path, false};
      }
      path.push_back(next);
      visited.insert(next);
      cur = next;
    }
    return std::pair{path, false};
  };

  for (Arc a : lone_arcs) {
    if (all_arcs.count(a)) {
      t.issues.push_back(
          {"lone-arc", "arc " + arc_str(a) + " declared crossing-free but occurs in crossings"});
      continue;
    }
    if (visited.count(a)) {
      t.issues.push_back({"lone-arc", "arc " + arc_str(a) + " declared twice"});
      continue;
    }
    visited.insert(a);
    t.paths.push_back({a});
  }

  for (Arc start : chain_starts) {
    if (visited.count(start)) continue;  // trivial strand listed as lone arc
    auto [path, closed] = follow_chain(start);
    if (closed) {
      t.issues.push_back({"open-path", "boundary arc " + arc_str(start) + " lies on a cycle"});
    }
    t.paths.push_back(std::move(path));
  }

  // Everything else must close up.
  for (Arc a : all_arcs) {
    if (visited.count(a)) continue;
    if (!occ.in_count.count(a) || !occ.out_count.count(a)) {
      if (occ.in_count.count(a) == 0 && occ.out_count.count(a) != 0) continue;  // handled from its start
      // An arc with an end at a crossing but no matching other end.
      auto [path, closed] = follow_chain(a);
      if (!closed) {
        t.issues.push_back({"open-path", "arc " + arc_str(a) + " does not close into a cycle"});
      }
      t.paths.push_back(std::move(path));
      continue;
    }
  }
  for (Arc a : all_arcs) {
    if (visited.count(a)) continue;
    if (occ.in_count.count(a) && occ.out_count.count(a)) {
      auto [path, closed] = follow_chain(a);
      if (!closed) {
        t.issues.push_back({"open-path", "arc " + arc_str(a) + " does not close into a cycle"});
      }
      t.paths.push_back(std::move(path));
    }
  }
  // Arcs that only ever leave a crossing (outgoing end only, never incoming).
  for (Arc a : all_arcs) {
    if (!visited.count(a) && !occ.in_count.count(a)) {
      visited.insert(a);
      t.paths.push_back({a});
      t.issues.push_back({"open-path", "arc " + arc_str(a) + " does not close into a cycle"});
    }
  }

  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    for (Arc a : t.paths[i]) t.arc_path[a] = static_cast<int>(i);
  }
  return t;
}

namespace {

// Rotates a cycle to start at its smallest arc.
std::vector<Arc> normalize_cycle(std::vector<Arc> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace

LinkDiagram LinkDiagram::unchecked(std::vector<Crossing> crossings, std::vector<Arc> lone_arcs,
                                   int declared_m) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.lone_arcs_ = std::move(lone_arcs);
  d.declared_m_ = declared_m;
  Traversal t = trace_arcs(d.crossings_, d.lone_arcs_, {});
  if (t.issues.empty()) {
    std::vector<std::vector<Arc>> comps;
    for (auto& p : t.paths) comps.push_back(normalize_cycle(std::move(p)));
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    d.components_ = std::move(comps);
    for (std::size_t i = 0; i < d.components_.size(); ++i) {
      for (Arc a : d.components_[i]) d.arc_component_[a] = static_cast<int>(i);
    }
  }
  return d;
}

LinkDiagram LinkDiagram::make(std::vector<Crossing> crossings, std::vector<Arc> lone_arcs,
                              int declared_m) {
  LinkDiagram d = unchecked(std::move(crossings), std::move(lone_arcs), declared_m);
  auto issues = validate(d);
  if (!issues.empty()) {
    throw DiagramError("invalid link diagram: " + issues.front().code + ": " +
                       issues.front().detail);
  }
  return d;
}

LinkDiagram LinkDiagram::make_ordered(std::vector<Crossing> crossings, std::vector<Arc> lone_arcs,
                                      const std::vector<Arc>& representatives) {
  LinkDiagram d = make(std::move(crossings), std::move(lone_arcs),
                       static_cast<int>(representatives.size()));
  std::vector<std::vector<Arc>> ordered;
  std::set<int> used;
  for (Arc rep : representatives) {
    auto it = d.arc_component_.find(rep);
    if (it == d.arc_component_.end()) {
      throw DiagramError("component representative arc " + arc_str(rep) + " not present");
    }
    if (!used.insert(it->second).second) {
      throw DiagramError("two representatives name the same component");
    }
    ordered.push_back(d.components_[it->second]);
  }
  if (ordered.size() != d.components_.size()) {
    throw DiagramError("component representatives do not cover the diagram");
  }
  d.components_ = std::move(ordered);
  d.arc_component_.clear();
  for (std::size_t i = 0; i < d.components_.size(); ++i) {
    for (Arc a : d.components_[i]) d.arc_component_[a] = static_cast<int>(i);
  }
  return d;
}

int LinkDiagram::component_of(Arc a) const {
  auto it = arc_component_.find(a);
  if (it == arc_component_.end()) throw DiagramError("unknown arc " + arc_str(a));
  return it->second;
}

Arc LinkDiagram::max_arc() const {
  Arc mx = 0;
  for (const auto& comp : components_) {
    for (Arc a : comp) mx = std::max(mx, a);
  }
  return mx;
}

int LinkDiagram::self_writhe(int i) const {
  int w = 0;
  for (const Crossing& c : crossings_) {
    if (component_of(c.in_under()) == i && component_of(c.in_over()) == i) w += c.sign;
  }
  return w;
}

StringLinkDiagram StringLinkDiagram::unchecked(std::vector<Crossing> crossings,
                                               std::vector<Arc> bottom, std::vector<Arc> top) {
  StringLinkDiagram s;
  s.crossings_ = std::move(crossings);
  s.bottom_ = std::move(bottom);
  s.top_ = std::move(top);

  Occurrences occ = collect_occurrences(s.crossings_);
  std::vector<Arc> chain_starts;
  std::vector<bool> flows_up;
  for (std::size_t i = 0; i < s.bottom_.size(); ++i) {
    Arc b = s.bottom_[i];
    bool up = !occ.out_count.count(b);  // a downward strand leaves via its bottom arc
    flows_up.push_back(up);
    chain_starts.push_back(up ? b : (i < s.top_.size() ? s.top_[i] : b));
  }
  Traversal t = trace_arcs(s.crossings_, {}, chain_starts);
  if (t.issues.empty() && t.paths.size() == s.bottom_.size()) {
    // trace_arcs lists chain paths in chain_starts order.
    s.strands_ = std::move(t.paths);
    s.flows_up_ = std::move(flows_up);
    for (std::size_t i = 0; i < s.strands_.size(); ++i) {
      for (Arc a : s.strands_[i]) s.arc_strand_[a] = static_cast<int>(i);
    }
  }
  return s;
}

StringLinkDiagram StringLinkDiagram::make(std::vector<Crossing> crossings, std::vector<Arc> bottom,
                                          std::vector<Arc> top) {
  StringLinkDiagram s = unchecked(std::move(crossings), std::move(bottom), std::move(top));
  auto issues = validate(s);
  if (!issues.empty()) {
    throw DiagramError("invalid string link diagram: " + issues.front().code + ": " +
                       issues.front().detail);
  }
  return s;
}

int StringLinkDiagram::strand_of(Arc a) const {
  auto it = arc_strand_.find(a);
  if (it == arc_strand_.end()) throw DiagramError("unknown arc " + arc_str(a));
  return it->second;
}

Arc StringLinkDiagram::max_arc() const {
  Arc mx = 0;
  for (const auto& st : strands_) {
    for (Arc a : st) mx = std::max(mx, a);
  }
  return mx;
}

std::vector<ValidationIssue> validate(const LinkDiagram& d) {
  std::vector<ValidationIssue> issues = crossing_issues(d.crossings());
  for (Arc a : d.lone_arcs()) {
    if (a <= 0) issues.push_back({"arc-label", "lone arc labels must be positive"});
  }
  Traversal t = trace_arcs(d.crossings(), d.lone_arcs(), {});
  for (auto& is : t.issues) issues.push_back(std::move(is));
  if (issues.empty() && d.declared_m() >= 0 &&
      d.declared_m() != static_cast<int>(t.paths.size())) {
    issues.push_back({"component-count",
                      "header declares " + std::to_string(d.declared_m()) + " components, found " +
                          std::to_string(t.paths.size())});
  }
  return issues;
}

std::vector<ValidationIssue> validate(const StringLinkDiagram& s) {
  std::vector<ValidationIssue> issues = crossing_issues(s.crossings());
  if (s.bottom().size() != s.top().size()) {
    issues.push_back({"endpoints", "bottom and top position counts differ"});
    return issues;
  }
  Occurrences occ = collect_occurrences(s.crossings());
  std::set<Arc> seen;
  for (std::size_t i = 0; i < s.bottom().size(); ++i) {
    Arc b = s.bottom()[i];
    Arc tp = s.top()[i];
    if (b <= 0 || tp <= 0) {
      issues.push_back({"arc-label", "endpoint arc labels must be positive"});
      continue;
    }
    bool trivial = !occ.in_count.count(b) && !occ.out_count.count(b);
    if (trivial) {
      if (b != tp) {
        issues.push_back({"endpoints", "crossing-free strand " + std::to_string(i + 1) +
                                           " must use one arc for both endpoints"});
      }
      if (!seen.insert(b).second) {
        issues.push_back({"endpoints", "arc " + arc_str(b) + " used by two strands"});
      }
      continue;
    }
    if (!seen.insert(b).second || (b != tp && !seen.insert(tp).second)) {
      issues.push_back({"endpoints", "strand " + std::to_string(i + 1) + " reuses endpoint arcs"});
    }
  }
  if (!issues.empty()) return issues;

  std::vector<Arc> chain_starts;
  for (std::size_t i = 0; i < s.bottom().size(); ++i) {
    Arc b = s.bottom()[i];
    bool up = !occ.out_count.count(b);
    chain_starts.push_back(up ? b : s.top()[i]);
  }
  Traversal t = trace_arcs(s.crossings(), {}, chain_starts);
  for (auto& is : t.issues) issues.push_back(std::move(is));
  if (!issues.empty()) return issues;

  if (t.paths.size() != s.bottom().size()) {
    issues.push_back({"closed-component",
                      "diagram contains closed cycles; string link strands must all be open"});
    return issues;
  }
  for (std::size_t i = 0; i < s.bottom().size(); ++i) {
    const auto& path = t.paths[i];
    Arc b = s.bottom()[i];
    Arc tp = s.top()[i];
    bool up = !occ.out_count.count(b);
    Arc want_start = up ? b : tp;
    Arc want_end = up ? tp : b;
    if (path.front() != want_start || path.back() != want_end) {
      issues.push_back({"strand-map", "strand " + std::to_string(i + 1) +
                                          " does not connect bottom " + arc_str(b) + " to top " +
                                          arc_str(tp)});
    }
  }
  return issues;
}

}  // namespace shakelink
