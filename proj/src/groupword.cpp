#include "shakelink/groupword.hpp"

namespace shakelink {

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GroupWord concat_reduced(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (const Letter& l : b) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->gen, -it->exp});
  }
  return out;
}

GroupWord power(const GroupWord& w, int e) {
  return e >= 0 ? w : inverse(w);
}

GroupWord conjugate(const GroupWord& w, const GroupWord& u, int e) {
  return concat_reduced(concat_reduced(power(u, e), w), power(u, -e));
}

long long exponent_sum(const GroupWord& w, int g) {
  long long s = 0;
  for (const Letter& l : w) {
    if (l.gen == g) s += l.exp;
  }
  return s;
}

}  // namespace shakelink
