#include "ppg/bits.hpp"

#include <algorithm>
#include <map>

namespace ppg {

Bits Bits::cat(const Bits& t) const {
  std::vector<uint8_t> d = digits_;
  d.insert(d.end(), t.digits_.begin(), t.digits_.end());
  return Bits(std::move(d));
}

Bits Bits::cat(uint8_t b) const {
  std::vector<uint8_t> d = digits_;
  d.push_back(b & 1);
  return Bits(std::move(d));
}

Bits Bits::restrict_to(std::size_t n) const {
  if (n > size()) throw error("restriction longer than word");
  return Bits(std::vector<uint8_t>(digits_.begin(), digits_.begin() + n));
}

Bits Bits::drop(std::size_t n) const {
  if (n > size()) throw error("dropping more digits than present");
  return Bits(std::vector<uint8_t>(digits_.begin() + n, digits_.end()));
}

Bits Bits::complement() const {
  std::vector<uint8_t> d = digits_;
  for (auto& b : d) b ^= 1;
  return Bits(std::move(d));
}

bool Bits::is_constant() const {
  for (uint8_t b : digits_)
    if (b != digits_[0]) return false;
  return true;
}

std::string Bits::str() const {
  if (empty()) return "e";
  std::string s;
  for (uint8_t b : digits_) s += static_cast<char>('0' + b);
  return s;
}

Bits Bits::parse(const std::string& s) {
  if (s == "e") return Bits{};
  std::vector<uint8_t> d;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '0' || s[i] == '1')
      d.push_back(static_cast<uint8_t>(s[i] - '0'));
    else
      throw parse_error("expected binary digit", i);
  }
  return Bits(std::move(d));
}

PrefixRel prefix_relation(const Bits& s, const Bits& t) {
  std::size_t n = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] != t[i]) return PrefixRel::incompatible;
  if (s.size() == t.size()) return PrefixRel::equal;
  return s.size() < t.size() ? PrefixRel::prefix : PrefixRel::extension;
}

bool is_incompatible(const Bits& s, const Bits& t) {
  return prefix_relation(s, t) == PrefixRel::incompatible;
}

LexOrder lex_compare(const Bits& s, const Bits& t) {
  switch (prefix_relation(s, t)) {
    case PrefixRel::equal:
      return LexOrder::equal;
    case PrefixRel::extension:  // t is a proper initial part of s
      return LexOrder::less_extension;
    case PrefixRel::prefix:
      return LexOrder::greater_extension;
    case PrefixRel::incompatible: {
      std::size_t i = 0;
      while (s[i] == t[i]) ++i;
      return s[i] < t[i] ? LexOrder::less : LexOrder::greater;
    }
  }
  throw error("unreachable");
}

bool lex_less(const Bits& s, const Bits& t) {
  auto o = lex_compare(s, t);
  return o == LexOrder::less || o == LexOrder::less_extension;
}

namespace {

// Sort order for antichain members: first point of difference decides.
bool antichain_less(const Bits& a, const Bits& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

// Leaf condition: sum of 2^-|s| over members equals 1 with pairwise
// incompatibility. Checked exactly by recursive tree descent.
bool covers_exactly(const std::vector<Bits>& sorted, std::size_t lo,
                    std::size_t hi, Bits& path) {
  if (lo >= hi) return false;
  if (hi - lo == 1) return sorted[lo] == path;
  // all members must properly extend path; split on the next digit
  std::size_t mid = lo;
  while (mid < hi && sorted[mid].size() > path.size() &&
         sorted[mid][path.size()] == 0)
    ++mid;
  if (mid == lo || mid == hi) return false;
  bool ok;
  path.push_back(0);
  ok = covers_exactly(sorted, lo, mid, path);
  path.pop_back();
  if (!ok) return false;
  path.push_back(1);
  ok = covers_exactly(sorted, mid, hi, path);
  path.pop_back();
  return ok;
}

}  // namespace

PrefixSet::PrefixSet(std::vector<Bits> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), antichain_less);
  for (std::size_t i = 0; i + 1 < members_.size(); ++i)
    if (members_[i] == members_[i + 1]) throw error("prefix set has duplicates");
  Bits path;
  if (!covers_exactly(members_, 0, members_.size(), path))
    throw error("not a prefix set: some sequence is missed or hit twice");
}

std::optional<std::size_t> PrefixSet::find_prefix_of(const Bits& u) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (is_prefix(members_[i], u)) return i;
  return std::nullopt;
}

bool dominates(const PrefixSet& t, const PrefixSet& s) {
  for (const Bits& m : s.members()) {
    bool found = false;
    for (const Bits& e : t.members())
      if (is_prefix(m, e)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

PrefixSet minimal_cover(const std::vector<Bits>& a) {
  // Nodes: all prefixes of elements of a, closed under adding the sibling of
  // any present child. Leaves of the closure form the cover.
  std::set<std::vector<uint8_t>> nodes;
  nodes.insert(std::vector<uint8_t>{});  // root
  for (const Bits& w : a)
    for (std::size_t i = 0; i <= w.size(); ++i)
      nodes.insert(w.restrict_to(i).digits());
  std::set<std::vector<uint8_t>> internal;
  for (const auto& n : nodes)
    if (!n.empty()) {
      auto parent = n;
      parent.pop_back();
      internal.insert(parent);
    }
  for (const auto& p : internal) {
    auto child = p;
    child.push_back(0);
    nodes.insert(child);
    child.back() = 1;
    nodes.insert(child);
  }
  std::vector<Bits> leaves;
  for (const auto& n : nodes)
    if (!internal.count(n)) leaves.push_back(Bits(n));
  return PrefixSet(std::move(leaves));
}

}  // namespace ppg
