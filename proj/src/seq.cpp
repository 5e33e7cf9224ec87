#include "ppg/seq.hpp"

#include <algorithm>

namespace ppg {

namespace {

// Shortest w with v = w^k.
Bits primitive_root(const Bits& v) {
  for (std::size_t d = 1; d <= v.size(); ++d) {
    if (v.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < v.size() && ok; ++i)
      if (v[i] != v[i % d]) ok = false;
    if (ok) return v.restrict_to(d);
  }
  return v;
}

}  // namespace

Seq::Seq(Bits preperiod, Bits period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw error("period must be nonempty");
  per_ = primitive_root(per_);
  // Absorb the tail of the preperiod into the period by rotating.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    std::vector<uint8_t> rot(per_.digits());
    std::rotate(rot.begin(), rot.end() - 1, rot.end());
    per_ = Bits(std::move(rot));
    pre_.pop_back();
  }
}

Bits Seq::take(std::size_t n) const {
  std::vector<uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = digit(i);
  return Bits(std::move(d));
}

bool Seq::starts_with(const Bits& s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (digit(i) != s[i]) return false;
  return true;
}

Seq Seq::drop(std::size_t n) const {
  if (n <= pre_.size()) return Seq(pre_.drop(n), per_);
  std::size_t k = (n - pre_.size()) % per_.size();
  std::vector<uint8_t> rot(per_.digits());
  std::rotate(rot.begin(), rot.begin() + k, rot.end());
  return Seq(Bits{}, Bits(std::move(rot)));
}

Seq Seq::prepend(const Bits& s) const { return Seq(s.cat(pre_), per_); }

Seq Seq::complement() const { return Seq(pre_.complement(), per_.complement()); }

std::string Seq::str() const {
  std::string s;
  for (uint8_t b : pre_.digits()) s += static_cast<char>('0' + b);
  s += '(';
  for (uint8_t b : per_.digits()) s += static_cast<char>('0' + b);
  s += ')';
  return s;
}

Seq Seq::parse(const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos) throw parse_error("expected '(' in sequence", s.size());
  if (s.empty() || s.back() != ')') throw parse_error("expected ')' at end of sequence", s.size());
  std::vector<uint8_t> pre, per;
  for (std::size_t i = 0; i < open; ++i) {
    if (s[i] != '0' && s[i] != '1') throw parse_error("expected binary digit", i);
    pre.push_back(static_cast<uint8_t>(s[i] - '0'));
  }
  for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw parse_error("expected binary digit", i);
    per.push_back(static_cast<uint8_t>(s[i] - '0'));
  }
  if (per.empty()) throw parse_error("period must be nonempty", open + 1);
  return Seq(Bits(std::move(pre)), Bits(std::move(per)));
}

bool tail_equivalent(const Seq& a, const Seq& b) {
  // Canonical periods are primitive, so the tails agree from some point on
  // iff the periods are rotations of one another.
  if (a.period().size() != b.period().size()) return false;
  std::size_t n = a.period().size();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (a.period()[i] != b.period()[(i + r) % n]) ok = false;
    if (ok) return true;
  }
  return false;
}

Seq random_seq(std::mt19937_64& rng, std::size_t max_pre, std::size_t max_per) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_pre);
  std::uniform_int_distribution<std::size_t> per_len(1, max_per);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<uint8_t> pre(pre_len(rng)), per(per_len(rng));
  for (auto& b : pre) b = static_cast<uint8_t>(bit(rng));
  for (auto& b : per) b = static_cast<uint8_t>(bit(rng));
  return Seq(Bits(std::move(pre)), Bits(std::move(per)));
}

Seq random_eventually_constant(std::mt19937_64& rng, std::size_t max_pre) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_pre);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<uint8_t> pre(pre_len(rng));
  for (auto& b : pre) b = static_cast<uint8_t>(bit(rng));
  return Seq(Bits(std::move(pre)), Bits{bit(rng)});
}

}  // namespace ppg
