#include "shakelink/fixtures.hpp"

#include <charconv>
#include <cstdlib>
#include <utility>

namespace shakelink {

namespace {

struct BraidState {
  std::vector<Arc> cur;
  Arc next = 0;
};

BraidState braid_start(int strands) {
  if (strands < 1) throw DiagramError("braid needs at least one strand");
  BraidState st;
  st.cur.resize(strands);
  for (int i = 0; i < strands; ++i) st.cur[i] = i + 1;
  st.next = strands + 1;
  return st;
}

void apply_letter(BraidState& st, int letter, std::vector<Crossing>& cs) {
  int k = std::abs(letter);
  if (k < 1 || k >= static_cast<int>(st.cur.size())) {
    throw DiagramError("braid letter out of range");
  }
  int j = k - 1;
  Arc u2 = st.next++;
  Arc o2 = st.next++;
  if (letter > 0) {
    cs.push_back(Crossing::from_tuple(st.cur[j + 1], u2, st.cur[j], o2, 1));
    st.cur[j] = u2;
    st.cur[j + 1] = o2;
  } else {
    cs.push_back(Crossing::from_tuple(st.cur[j], u2, st.cur[j + 1], o2, -1));
    st.cur[j] = o2;
    st.cur[j + 1] = u2;
  }
}

void rename_arc(std::vector<Crossing>& cs, Arc from, Arc to) {
  for (Crossing& c : cs) {
    for (Arc& a : c.cyclic) {
      if (a == from) a = to;
    }
  }
}

}  // namespace

StringLinkDiagram from_braid(int strands, const std::vector<int>& word) {
  BraidState st = braid_start(strands);
  std::vector<Crossing> cs;
  std::vector<Arc> bottom = st.cur;
  for (int letter : word) apply_letter(st, letter, cs);
  return StringLinkDiagram::make(std::move(cs), std::move(bottom), std::move(st.cur));
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  BraidState st = braid_start(strands);
  std::vector<Crossing> cs;
  for (int letter : word) apply_letter(st, letter, cs);
  std::vector<Arc> lone;
  for (int i = 0; i < strands; ++i) {
    if (st.cur[i] == i + 1) {
      lone.push_back(i + 1);
    } else {
      rename_arc(cs, st.cur[i], i + 1);
    }
  }
  return LinkDiagram::make(std::move(cs), std::move(lone));
}

StringLinkDiagram trivial_string_link(int m) { return from_braid(m, {}); }

StringLinkDiagram clasp() { return from_braid(2, {1, 1}); }

StringLinkDiagram borromean_strands() { return from_braid(3, {1, -2, 1, -2, 1, -2}); }

LinkDiagram unknot() { return LinkDiagram::make({}, {1}); }

LinkDiagram unlink(int m) {
  if (m < 0) throw DiagramError("component count cannot be negative");
  std::vector<Arc> lone;
  for (int i = 1; i <= m; ++i) lone.push_back(i);
  return LinkDiagram::make({}, std::move(lone));
}

LinkDiagram hopf() {
  std::vector<Crossing> cs;
  cs.push_back(Crossing::from_tuple(1, 2, 3, 4, 1));
  cs.push_back(Crossing::from_tuple(4, 3, 2, 1, 1));
  return LinkDiagram::make(std::move(cs), {});
}

LinkDiagram trefoil() { return braid_closure(2, {1, 1, 1}); }

LinkDiagram figure_eight() { return braid_closure(3, {1, -2, 1, -2}); }

LinkDiagram trefoil_sum(int k) {
  if (k < 1) throw DiagramError("connected sum needs at least one summand");
  StringLinkDiagram open = open_knot(trefoil());
  StringLinkDiagram acc = open;
  for (int i = 1; i < k; ++i) acc = compose(acc, open);
  return closure(acc);
}

LinkDiagram borromean() { return braid_closure(3, {1, -2, 1, -2, 1, -2}); }

LinkDiagram with_meridian(const LinkDiagram& knot) {
  if (knot.m() != 1) throw DiagramError("meridian companion needs a knot");
  return add_meridian(knot, knot.components()[0].front(), 1);
}

LinkDiagram finger_hopf() {
  std::vector<Crossing> cs;
  cs.push_back(Crossing::from_tuple(1, 2, 7, 8, 1));
  cs.push_back(Crossing::from_tuple(12, 7, 2, 3, 1));
  cs.push_back(Crossing::from_tuple(3, 4, 8, 9, 1));
  cs.push_back(Crossing::from_tuple(11, 12, 4, 5, 1));
  cs.push_back(Crossing::from_tuple(5, 6, 9, 10, -1));
  cs.push_back(Crossing::from_tuple(10, 11, 6, 1, -1));
  return LinkDiagram::make(std::move(cs), {});
}

MultidiskSpec finger_disks() {
  MultidiskSpec e;
  e.subdisks = {{{5, 1}, {5, -1}}, {{8, 1}}};
  return e;
}

LinkDiagram finger_link(const StringLinkDiagram& k) {
  if (k.m() != 1) throw DiagramError("finger companion needs a one strand pattern");
  StringLinkDiagram pattern = side_by_side(k, trivial_string_link(1));
  return infect(finger_hopf(), finger_disks(), pattern).diagram;
}

LinkDiagram meridian_borromean() {
  LinkDiagram b = borromean();
  return add_meridian(b, b.components()[2].front(), 1);
}

LinkDiagram meridian_unlink() { return add_meridian(unlink(3), 3, 1); }

LinkDiagram commutator_link() {
  return braid_closure(3, {1, 1, 2, 2, -1, -1, -2, -2});
}

LinkDiagram commutator_link_kinked() {
  return braid_closure(3, {2, -2, 1, 1, 2, 2, -1, -1, 1, -1, -2, -2});
}

namespace {

int parse_count(const std::string& text, const std::string& what) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw DiagramError(what + " wants a number, got '" + text + "'");
  }
  return value;
}

LinkDiagram knot_fixture(const std::string& name) {
  ParsedDiagram inner = fixture(name);
  const LinkDiagram* d = std::get_if<LinkDiagram>(&inner);
  if (d == nullptr || d->m() != 1) {
    throw DiagramError("'" + name + "' is not a knot fixture");
  }
  return *d;
}

}  // namespace

ParsedDiagram fixture(const std::string& name) {
  std::string head = name;
  std::string arg;
  auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')' || open + 1 >= name.size() - 1) {
      throw DiagramError("bad fixture name '" + name + "'");
    }
    head = name.substr(0, open);
    arg = name.substr(open + 1, name.size() - open - 2);
  }

  if (arg.empty()) {
    if (head == "unknot") return unknot();
    if (head == "hopf") return hopf();
    if (head == "trefoil") return trefoil();
    if (head == "figure_eight") return figure_eight();
    if (head == "borromean") return borromean();
    if (head == "borromean_sl") return borromean_strands();
    if (head == "clasp") return clasp();
    if (head == "finger_hopf") return finger_hopf();
    if (head == "fig11_L") return meridian_borromean();
    if (head == "fig11_Lprime") return meridian_unlink();
    if (head == "levine_A") return commutator_link();
    if (head == "levine_H") return commutator_link_kinked();
  } else {
    if (head == "unlink") return unlink(parse_count(arg, "unlink"));
    if (head == "trivial_sl") return trivial_string_link(parse_count(arg, "trivial_sl"));
    if (head == "trefoil_sum") return trefoil_sum(parse_count(arg, "trefoil_sum"));
    if (head == "h") return with_meridian(knot_fixture(arg));
    if (head == "L") return finger_link(open_knot(knot_fixture(arg)));
  }
  throw DiagramError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {
      "unknot",       "unlink(m)",   "hopf",          "trefoil",
      "figure_eight", "trefoil_sum(k)", "borromean",  "borromean_sl",
      "clasp",        "trivial_sl(m)", "finger_hopf", "h(knot)",
      "L(knot)",      "fig11_L",     "fig11_Lprime",  "levine_A",
      "levine_H",
  };
}

}  // namespace shakelink
