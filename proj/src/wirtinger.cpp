#include "shakelink/wirtinger.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace shakelink {

WirtingerPresentation wirtinger(const LinkDiagram& d, BaseArcPolicy policy) {
  WirtingerPresentation p;
  for (const auto& comp : d.components()) {
    for (Arc a : comp) p.generators.push_back(a);
    if (policy == BaseArcPolicy::lowest_arc) {
      p.base.push_back(*std::min_element(comp.begin(), comp.end()));
    } else {
      p.base.push_back(*std::max_element(comp.begin(), comp.end()));
    }
  }
  std::sort(p.generators.begin(), p.generators.end());
  for (const Crossing& c : d.crossings()) {
    p.relations.push_back({c.out_under(), c.in_under(), c.in_over(), c.sign});
  }
  return p;
}

std::vector<std::vector<StrandStep>> component_walks(const LinkDiagram& d,
                                                     const std::vector<Arc>& base) {
  if (static_cast<int>(base.size()) != d.m()) {
    throw DiagramError("one base arc per component expected");
  }
  // arc -> (crossing index, enters as under strand)
  std::map<Arc, std::pair<int, bool>> consumer;
  const auto& cs = d.crossings();
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    consumer[cs[k].in_under()] = {k, true};
    consumer[cs[k].in_over()] = {k, false};
  }

  std::vector<std::vector<StrandStep>> walks;
  for (int i = 0; i < d.m(); ++i) {
    const std::vector<Arc>& cycle = d.components()[i];
    auto at = std::find(cycle.begin(), cycle.end(), base[i]);
    if (at == cycle.end()) throw DiagramError("base arc not on its component");
    std::vector<StrandStep> walk;
    int n = static_cast<int>(cycle.size());
    int start = static_cast<int>(at - cycle.begin());
    for (int k = 0; k < n; ++k) {
      Arc a = cycle[(start + k) % n];
      auto used = consumer.find(a);
      if (used == consumer.end()) continue;  // lone circle
      walk.push_back({a, used->second.first, used->second.second});
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

}  // namespace shakelink
