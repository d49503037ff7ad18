#include "shakelink/milnor.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>

namespace shakelink {

int max_degree_cap() {
  const char* v = std::getenv("SHAKELINK_MAX_DEGREE");
  if (v == nullptr || *v == '\0') return kMaxDegree;
  int parsed = std::atoi(v);
  if (parsed < 1) return kMaxDegree;
  return std::min(parsed, kMaxDegree);
}

MilnorCalculator::MilnorCalculator(const LinkDiagram& d, int degree, BaseArcPolicy policy)
    : d_(d), degree_(std::clamp(degree, 1, max_degree_cap())) {
  WirtingerPresentation p = wirtinger(d_, policy);
  walks_ = component_walks(d_, p.base);

  // Round one: every meridian reads as its component generator. Later rounds
  // rebuild each arc along its strand, conjugating by the previous round's
  // over words; the series stabilize at the truncation degree.
  const auto& cs = d_.crossings();
  std::map<Arc, TruncatedSeries> cur;
  for (int i = 0; i < d_.m(); ++i) {
    for (Arc a : d_.components()[i]) {
      cur.emplace(a, TruncatedSeries::generator(i + 1, 1, degree_));
    }
  }
  for (int round = 0; round < degree_; ++round) {
    std::map<Arc, TruncatedSeries> next;
    for (int i = 0; i < d_.m(); ++i) {
      TruncatedSeries word = TruncatedSeries::generator(i + 1, 1, degree_);
      if (walks_[i].empty()) {
        next.emplace(d_.components()[i].front(), word);
        continue;
      }
      for (const StrandStep& st : walks_[i]) {
        next.emplace(st.arc, word);
        if (!st.under) continue;
        const TruncatedSeries& over = cur.at(cs[st.crossing].in_over());
        if (cs[st.crossing].sign > 0) {
          word = over.multiplied(word).multiplied(inverse_of(over));
        } else {
          word = inverse_of(over).multiplied(word).multiplied(over);
        }
      }
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  arc_series_ = std::move(cur);
}

const TruncatedSeries& MilnorCalculator::longitude(int comp) {
  auto it = longitudes_.find(comp);
  if (it != longitudes_.end()) return it->second;

  const auto& cs = d_.crossings();
  TruncatedSeries ell = TruncatedSeries::one(degree_);
  for (const StrandStep& st : walks_[comp]) {
    if (!st.under) continue;
    const TruncatedSeries& over = arc_series_.at(cs[st.crossing].in_over());
    ell = ell.multiplied(cs[st.crossing].sign > 0 ? over : inverse_of(over));
  }
  int w = d_.self_writhe(comp);
  for (int k = 0; k < std::abs(w); ++k) ell.mul_generator(comp + 1, w > 0 ? -1 : 1);
  return longitudes_.emplace(comp, std::move(ell)).first->second;
}

void MilnorCalculator::check_index(const std::vector<int>& index) const {
  if (index.size() < 2) throw DiagramError("mu wants an index of length at least two");
  for (int i : index) {
    if (i < 1 || i > d_.m()) throw DiagramError("index entry outside components");
  }
  if (static_cast<int>(index.size()) - 1 > degree_) {
    throw DiagramError("index longer than the truncation degree allows");
  }
}

long long MilnorCalculator::mu(const std::vector<int>& index) {
  check_index(index);
  Monomial mono(index.begin(), index.end() - 1);
  return longitude(index.back() - 1).coefficient(mono);
}

long long MilnorCalculator::delta(const std::vector<int>& index) {
  check_index(index);
  int l = static_cast<int>(index.size());
  long long g = 0;
  std::set<std::vector<int>> seen;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    int picked = std::popcount(mask);
    if (picked < 2 || picked >= l) continue;
    std::vector<int> sub;
    for (int k = 0; k < l; ++k) {
      if (mask & (1u << k)) sub.push_back(index[k]);
    }
    for (int r = 0; r < picked; ++r) {
      std::vector<int> rot(sub.begin() + r, sub.end());
      rot.insert(rot.end(), sub.begin(), sub.begin() + r);
      if (!seen.insert(rot).second) continue;
      g = std::gcd(g, mu(rot));
    }
  }
  return g;
}

MuResult MilnorCalculator::evaluate(const std::vector<int>& index) {
  MuResult r;
  r.value = mu(index);
  r.delta = delta(index);
  r.mubar = r.delta == 0 ? r.value : ((r.value % r.delta) + r.delta) % r.delta;
  r.q = degree_;
  return r;
}

FirstNonVanishing first_nonvanishing(const LinkDiagram& d, int max_length,
                                     BaseArcPolicy policy) {
  FirstNonVanishing out;
  if (d.m() < 2) return out;
  int deepest = std::min(max_length, max_degree_cap() + 1);
  for (int l = 2; l <= deepest; ++l) {
    MilnorCalculator calc(d, l, policy);
    std::vector<int> index(l, 1);
    std::vector<std::pair<std::vector<int>, long long>> hits;
    while (true) {
      MuResult r = calc.evaluate(index);
      if (r.mubar != 0) hits.emplace_back(index, r.mubar);
      int at = l - 1;
      while (at >= 0 && index[at] == d.m()) {
        index[at] = 1;
        --at;
      }
      if (at < 0) break;
      ++index[at];
    }
    if (!hits.empty()) {
      out.length = l;
      out.values = std::move(hits);
      return out;
    }
  }
  return out;
}

std::vector<int> parse_index(const std::string& digits) {
  if (digits.size() < 2) throw DiagramError("index wants at least two digits");
  std::vector<int> index;
  for (char c : digits) {
    if (c < '1' || c > '9') throw DiagramError("index digits run 1 to 9");
    index.push_back(c - '0');
  }
  return index;
}

std::string index_digits(const std::vector<int>& index) {
  std::string out;
  for (int i : index) {
    if (i < 1 || i > 9) throw DiagramError("only components 1 to 9 print as digits");
    out.push_back(static_cast<char>('0' + i));
  }
  return out;
}

std::string mu_line(const std::string& digits, const MuResult& r) {
  return "mu I=" + digits + " value=" + std::to_string(r.value) +
         " delta=" + std::to_string(r.delta) + " mubar=" + std::to_string(r.mubar) +
         " q=" + std::to_string(r.q);
}

}  // namespace shakelink
