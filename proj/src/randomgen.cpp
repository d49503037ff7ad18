#include "shakelink/randomgen.hpp"

#include <utility>

#include "shakelink/fixtures.hpp"

namespace shakelink {

std::mt19937_64 seeded(unsigned long long seed) { return std::mt19937_64(seed); }

std::vector<int> random_pure_braid_word(std::mt19937_64& g, int strands, int max_letters) {
  if (strands < 2 || max_letters < 2) return {};
  std::uniform_int_distribution<int> len_d(1, max_letters);
  std::uniform_int_distribution<int> gen_d(1, strands - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> home(strands);
  for (int i = 0; i < strands; ++i) home[i] = i;
  for (int attempt = 0; attempt < 500; ++attempt) {
    int len = len_d(g);
    std::vector<int> word;
    std::vector<int> pos = home;
    for (int k = 0; k < len; ++k) {
      int which = gen_d(g);
      word.push_back(coin(g) != 0 ? which : -which);
      std::swap(pos[which - 1], pos[which]);
    }
    if (pos == home) return word;
  }
  return {};
}

StringLinkDiagram random_string_link(std::mt19937_64& g, int strands, int max_letters) {
  return from_braid(strands, random_pure_braid_word(g, strands, max_letters));
}

MultidiskSpec random_respecting_multidisk(std::mt19937_64& g, const LinkDiagram& host,
                                          int max_passages) {
  if (host.m() < 1) throw DiagramError("host has no components");
  MultidiskSpec e;
  std::uniform_int_distribution<int> comp_d(0, host.m() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int j = 0; j < host.m(); ++j) {
    std::vector<Passage> disk;
    disk.push_back({host.components()[j].front(), 1});
    if (max_passages >= 3 && coin(g) != 0) {
      Arc a = host.components()[comp_d(g)].front();
      std::vector<Passage> pair = {{a, 1}, {a, -1}};
      if (coin(g) != 0) {
        disk.insert(disk.begin(), pair.begin(), pair.end());
      } else {
        disk.insert(disk.end(), pair.begin(), pair.end());
      }
    }
    e.subdisks.push_back(std::move(disk));
  }
  return e;
}

GroupWord random_group_word(std::mt19937_64& g, int gens, int letters) {
  std::uniform_int_distribution<int> gen_d(1, gens);
  std::uniform_int_distribution<int> coin(0, 1);
  GroupWord w;
  for (int i = 0; i < letters; ++i) {
    w.push_back({gen_d(g), coin(g) != 0 ? 1 : -1});
  }
  return free_reduce(w);
}

LinkDiagram random_product(std::mt19937_64& g) {
  std::uniform_int_distribution<int> base_d(0, 4);
  LinkDiagram d = unknot();
  switch (base_d(g)) {
    case 0: d = hopf(); break;
    case 1: d = borromean(); break;
    case 2: d = closure(clasp()); break;
    case 3: d = split_union(hopf(), unlink(1)); break;
    default: d = figure_eight(); break;
  }

  std::uniform_int_distribution<int> rounds_d(1, 2);
  std::uniform_int_distribution<int> op_d(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> twist_d(-1, 1);
  int rounds = rounds_d(g);
  for (int r = 0; r < rounds; ++r) {
    if (d.m() > 5) break;
    std::uniform_int_distribution<int> comp_d(0, d.m() - 1);
    switch (op_d(g)) {
      case 0: {
        std::vector<std::vector<int>> shapes = {{1, 1}, {1, -1}, {1, 1, -1}};
        const std::vector<int>& signs = shapes[comp_d(g) % shapes.size()];
        d = cable_component(d, comp_d(g), CopyPattern{signs}, twist_d(g)).diagram;
        break;
      }
      case 1: {
        Arc around = d.components()[comp_d(g)].front();
        d = add_meridian(d, around, coin(g) != 0 ? 1 : -1);
        break;
      }
      case 2: {
        if (d.m() < 2) {
          d = split_union(d, hopf());
          break;
        }
        int a = comp_d(g);
        int b = comp_d(g);
        if (a == b) b = (a + 1) % d.m();
        BandSpec spec;
        spec.end1 = d.components()[a].front();
        spec.end2 = d.components()[b].front();
        if (d.m() >= 3 && coin(g) != 0) {
          int other = 0;
          while (other == a || other == b) ++other;
          spec.route = {RouteEntry{d.components()[other].front(), coin(g) != 0,
                                   coin(g) != 0 ? 1 : -1}};
        }
        d = band_sum(d, spec);
        break;
      }
      default:
        d = split_union(d, coin(g) != 0 ? trefoil() : unlink(1));
        break;
    }
  }
  if (d.m() < 2) d = split_union(d, unlink(1));
  return d;
}

}  // namespace shakelink
