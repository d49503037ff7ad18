#include "shakelink/series.hpp"

namespace shakelink {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw SeriesError("series coefficient overflow");
  }
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw SeriesError("series coefficient overflow");
  }
  return r;
}

}  // namespace

std::uint64_t pack_monomial(const Monomial& m) {
  if (m.size() > static_cast<std::size_t>(kMaxDegree)) {
    throw SeriesError("monomial degree exceeds representation limit");
  }
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    int v = m[i];
    if (v < 1 || v > 255) throw SeriesError("variable id out of range");
    key |= static_cast<std::uint64_t>(v) << (8 * i);
  }
  return key;
}

Monomial unpack_monomial(std::uint64_t key) {
  Monomial m;
  while (key != 0) {
    m.push_back(static_cast<int>(key & 0xff));
    key >>= 8;
  }
  return m;
}

int monomial_degree(std::uint64_t key) {
  int d = 0;
  while (key != 0) {
    ++d;
    key >>= 8;
  }
  return d;
}

TruncatedSeries::TruncatedSeries(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw SeriesError("truncation degree must be between 0 and 8");
  }
}

TruncatedSeries TruncatedSeries::one(int degree) {
  TruncatedSeries s(degree);
  s.terms_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::generator(int g, int exp, int degree) {
  TruncatedSeries s(degree);
  s.terms_[0] = 1;
  if (exp == 1) {
    if (degree >= 1) s.terms_[pack_monomial({g})] = 1;
  } else if (exp == -1) {
    long long c = -1;
    Monomial m;
    for (int d = 1; d <= degree; ++d) {
      m.push_back(g);
      s.terms_[pack_monomial(m)] = c;
      c = -c;
    }
  } else {
    throw SeriesError("generator exponent must be +1 or -1");
  }
  return s;
}

long long TruncatedSeries::coefficient(const Monomial& m) const {
  if (static_cast<int>(m.size()) > degree_) return 0;
  auto it = terms_.find(pack_monomial(m));
  return it == terms_.end() ? 0 : it->second;
}

long long TruncatedSeries::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? 0 : it->second;
}

void TruncatedSeries::add_term(std::uint64_t key, long long value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second = checked_add(it->second, value);
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::add(const TruncatedSeries& rhs, long long scale) {
  for (const auto& [key, value] : rhs.terms_) {
    if (monomial_degree(key) > degree_) continue;
    add_term(key, checked_mul(value, scale));
  }
  return *this;
}

TruncatedSeries TruncatedSeries::multiplied(const TruncatedSeries& rhs) const {
  TruncatedSeries out(degree_);
  for (const auto& [k1, v1] : terms_) {
    int d1 = monomial_degree(k1);
    for (const auto& [k2, v2] : rhs.terms_) {
      int d2 = monomial_degree(k2);
      if (d1 + d2 > degree_) break;  // packed keys sort by degree first
      out.add_term(k1 | (k2 << (8 * d1)), checked_mul(v1, v2));
    }
  }
  return out;
}

void TruncatedSeries::mul_generator(int g, int exp) {
  if (g < 1 || g > 255) throw SeriesError("variable id out of range");
  if (exp == 1) {
    // S := S + S*X_g
    std::map<std::uint64_t, long long> next = terms_;
    for (const auto& [key, value] : terms_) {
      int d = monomial_degree(key);
      if (d >= degree_) continue;
      std::uint64_t nk = key | (static_cast<std::uint64_t>(g) << (8 * d));
      auto [it, inserted] = next.try_emplace(nk, value);
      if (!inserted) {
        it->second = checked_add(it->second, value);
        if (it->second == 0) next.erase(it);
      }
    }
    terms_ = std::move(next);
  } else if (exp == -1) {
    // S := S * (1 - X_g + X_g^2 - ...). Appending powers of a single
    // variable to each term keeps this linear in the output size.
    std::map<std::uint64_t, long long> next;
    for (const auto& [key, value] : terms_) {
      int d = monomial_degree(key);
      long long c = value;
      std::uint64_t nk = key;
      for (int j = d; j <= degree_; ++j) {
        auto [it, inserted] = next.try_emplace(nk, c);
        if (!inserted) {
          it->second = checked_add(it->second, c);
          if (it->second == 0) next.erase(it);
        }
        if (j < degree_) {
          nk |= static_cast<std::uint64_t>(g) << (8 * j);
          c = -c;
        }
      }
    }
    terms_ = std::move(next);
  } else {
    throw SeriesError("generator exponent must be +1 or -1");
  }
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
  return degree_ == rhs.degree_ && terms_ == rhs.terms_;
}

TruncatedSeries magnus_expand(const GroupWord& w, int degree) {
  TruncatedSeries s = TruncatedSeries::one(degree);
  for (const Letter& l : w) {
    s.mul_generator(l.gen, l.exp);
  }
  return s;
}

TruncatedSeries inverse_of(const TruncatedSeries& s) {
  if (s.constant_term() != 1) {
    throw SeriesError("only series with constant term one invert");
  }
  // (1 + n)^-1 = 1 - n + n^2 - ...
  TruncatedSeries neg = TruncatedSeries::one(s.degree());
  neg.add(s, -1);
  TruncatedSeries out = TruncatedSeries::one(s.degree());
  TruncatedSeries pow = TruncatedSeries::one(s.degree());
  for (int j = 0; j < s.degree(); ++j) {
    pow = pow.multiplied(neg);
    out.add(pow);
  }
  return out;
}

}  // namespace shakelink
