#include "ppg/treepair.hpp"

#include <algorithm>

namespace ppg {

TreePair::TreePair(PrefixSet s, PrefixSet t) : source(std::move(s)), target(std::move(t)) {
  if (source.size() != target.size())
    throw error("tree diagram needs equally sized prefix sets");
}

Seq TreePair::apply(const Seq& xi) const {
  for (std::size_t i = 0; i < source.size(); ++i)
    if (xi.starts_with(source[i]))
      return xi.drop(source[i].size()).prepend(target[i]);
  throw error("prefix set failed to cover a sequence");
}

std::optional<Bits> TreePair::apply_finite(const Bits& u) const {
  auto i = source.find_prefix_of(u);
  if (!i) return std::nullopt;
  return target[*i].cat(u.drop(source[*i].size()));
}

TreePair refine_target(const TreePair& p, const PrefixSet& fine) {
  std::vector<Bits> new_source, new_target;
  for (const Bits& m : fine.members()) {
    auto i = p.target.find_prefix_of(m);
    if (!i) throw error("refinement target does not dominate the pair");
    new_source.push_back(p.source[*i].cat(m.drop(p.target[*i].size())));
    new_target.push_back(m);
  }
  return TreePair(PrefixSet(std::move(new_source)), PrefixSet(std::move(new_target)));
}

TreePair TreePair::then(const TreePair& g) const {
  std::vector<Bits> mids = target.members();
  for (const Bits& m : g.source.members()) mids.push_back(m);
  PrefixSet mid = minimal_cover(mids);
  TreePair left = refine_target(*this, mid);
  TreePair right = refine_target(g.inverse(), mid).inverse();
  return TreePair(left.source, right.target);
}

namespace {

bool siblings(const Bits& a, const Bits& b) {
  return !a.empty() && a.size() == b.size() && a.back() == 0 && b.back() == 1 &&
         a.restrict_to(a.size() - 1) == b.restrict_to(b.size() - 1);
}

}  // namespace

TreePair TreePair::reduced() const {
  std::vector<Bits> s = source.members(), t = target.members();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (siblings(s[i], s[i + 1]) && siblings(t[i], t[i + 1])) {
        s[i] = s[i].restrict_to(s[i].size() - 1);
        t[i] = t[i].restrict_to(t[i].size() - 1);
        s.erase(s.begin() + static_cast<long>(i) + 1);
        t.erase(t.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return TreePair(PrefixSet(std::move(s)), PrefixSet(std::move(t)));
}

TreePair generator_pair(const Bits& s, int sign) {
  PrefixSet around = minimal_cover({s});
  std::vector<Bits> src, tgt;
  for (const Bits& m : around.members()) {
    if (m == s) {
      for (auto& suf : {Bits{0, 0}, Bits{0, 1}, Bits{1}}) src.push_back(s.cat(suf));
      for (auto& suf : {Bits{0}, Bits{1, 0}, Bits{1, 1}}) tgt.push_back(s.cat(suf));
    } else {
      src.push_back(m);
      tgt.push_back(m);
    }
  }
  TreePair p(PrefixSet(std::move(src)), PrefixSet(std::move(tgt)));
  return sign < 0 ? p.inverse() : p;
}

TreePair word_to_pair(const Word& w) {
  TreePair acc;
  for (const Letter& l : w.letters()) {
    if (l.gen.kind != GenKind::X) throw error("tree pairs exist for X-words only");
    int sign = l.exp < 0 ? -1 : 1;
    for (long i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i)
      acc = acc.then(generator_pair(l.gen.sub, sign));
  }
  return acc;
}

namespace {

// Word carrying the tree of `ps` to the right comb with the same leaf count.
// Recursively combs both subtrees, then rotates the left arm away with
// x_{prefix}, x_{prefix 1}, x_{prefix 11}, ...
void comb_word(const PrefixSet& ps, const Bits& at, std::vector<Letter>& out) {
  if (ps.size() == 1) return;
  std::vector<Bits> left, right;
  for (const Bits& m : ps.members()) {
    if (m[0] == 0)
      left.push_back(m.drop(1));
    else
      right.push_back(m.drop(1));
  }
  PrefixSet l(std::move(left)), r(std::move(right));
  comb_word(l, at.cat(Bits{0}), out);
  comb_word(r, at.cat(Bits{1}), out);
  std::size_t k = l.size() - 1;
  Bits sub = at;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(Letter{Gen{GenKind::X, sub}, 1});
    sub = sub.cat(Bits{1});
  }
}

}  // namespace

Word pair_to_word(const TreePair& p) {
  std::vector<Letter> ws, wt;
  comb_word(p.source, Bits{}, ws);
  comb_word(p.target, Bits{}, wt);
  return Word(std::move(ws)) * Word(std::move(wt)).inverse();
}

}  // namespace ppg
