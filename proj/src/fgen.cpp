#include "ppg/fgen.hpp"

#include <cstdlib>
#include <deque>
#include <map>

namespace ppg {

namespace {

const Gen gen_x{GenKind::X, Bits{}};
const Gen gen_x1{GenKind::X, Bits{1}};

Word letter_word(Gen g, long exp) { return Word::one(std::move(g), exp); }

// BFS edges: x, x^-1, x[1], x[1]^-1 in tie-break order.
struct Edge {
  Gen g;
  int sign;
};
const Edge kEdges[] = {{gen_x, 1}, {gen_x, -1}, {gen_x1, 1}, {gen_x1, -1}};

}  // namespace

Word f_word(const Bits& s) {
  if (s.is_constant()) throw error("no f-word: subscript is constant");
  Bits start{1, 0};
  if (s == start) return Word{};
  std::size_t cap = s.size() + 8;
  std::map<std::vector<uint8_t>, std::pair<std::vector<uint8_t>, int>> parent;
  std::deque<Bits> queue{start};
  parent[start.digits()] = {start.digits(), -1};
  while (!queue.empty()) {
    Bits cur = queue.front();
    queue.pop_front();
    for (int ei = 0; ei < 4; ++ei) {
      auto next = partial_apply_finite(cur, kEdges[ei].g.sub, kEdges[ei].sign);
      if (!next || next->size() > cap || parent.count(next->digits())) continue;
      parent[next->digits()] = {cur.digits(), ei};
      if (*next == s) {
        std::vector<Letter> letters;
        Bits at = *next;
        while (!(at == start)) {
          auto& [prev, e] = parent[at.digits()];
          letters.push_back(Letter{kEdges[e].g, kEdges[e].sign});
          at = Bits(prev);
        }
        std::reverse(letters.begin(), letters.end());
        return Word(std::move(letters));
      }
      queue.push_back(*next);
    }
  }
  throw error("f-word search failed for " + s.str());
}

ConjugatingElement conjugating_element(const Bits& u, const Bits& v) {
  if (!is_incompatible(u, v)) throw error("need incompatible sequences");
  if (!lex_less(u, v)) throw error("need u lex-less than v");
  auto done = [](const Bits& a, const Bits& b) { return a.size() <= 3 && b.size() <= 3; };
  using Key = std::pair<std::vector<uint8_t>, std::vector<uint8_t>>;
  std::map<Key, std::pair<Key, int>> parent;
  Key startk{u.digits(), v.digits()};
  parent[startk] = {startk, -1};
  std::deque<std::pair<Bits, Bits>> queue{{u, v}};
  std::size_t cap = u.size() + v.size() + 10;
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (done(a, b)) {
      // path from (u,v) to (a,b) is a word h with (u,v).h = (a,b); g = h^-1
      std::vector<Letter> letters;
      Key at{a.digits(), b.digits()};
      while (!(at == startk)) {
        auto& [prev, e] = parent[at];
        letters.push_back(Letter{kEdges[e].g, kEdges[e].sign});
        at = prev;
      }
      // letters hold the path edges back-to-front; negating each spells h^-1
      for (Letter& l : letters) l.exp = -l.exp;
      return ConjugatingElement{Word(std::move(letters)), a, b};
    }
    for (int ei = 0; ei < 4; ++ei) {
      auto na = partial_apply_finite(a, kEdges[ei].g.sub, kEdges[ei].sign);
      auto nb = partial_apply_finite(b, kEdges[ei].g.sub, kEdges[ei].sign);
      if (!na || !nb || na->size() + nb->size() > cap) continue;
      Key k{na->digits(), nb->digits()};
      if (parent.count(k)) continue;
      parent[k] = {Key{a.digits(), b.digits()}, ei};
      queue.emplace_back(*na, *nb);
    }
  }
  throw error("conjugating element search failed");
}

namespace {

Word conjugate(const Word& mid, const Word& by) { return by.inverse() * mid * by; }

// x^n as a word (empty for n = 0)
Word xpow(long n) { return n == 0 ? Word{} : letter_word(gen_x, n); }

Word expand_letter(const Gen& g, long exp, FiniteAlphabet alphabet);

Word expand_word(const Word& w, FiniteAlphabet alphabet) {
  Word out;
  for (const Letter& l : w.letters()) out = out * expand_letter(l.gen, l.exp, alphabet);
  return out;
}

Word expand_letter(const Gen& g, long exp, FiniteAlphabet alphabet) {
  const Bits& s = g.sub;
  if (g.kind == GenKind::X) {
    if (s.empty() || s == Bits{1}) return letter_word(g, exp);
    if (s == Bits{0}) {
      // x_0 = x^2 x_1^-1 x^-1; powers stay inside the conjugation
      Word base = xpow(2) * letter_word(gen_x1, -1) * xpow(-1);
      Word out;
      for (long i = 0; i < labs(exp); ++i) out = out * base;
      return exp > 0 ? out : out.inverse();
    }
    if (s.is_constant()) {
      long n = static_cast<long>(s.size()) - 1;
      Gen base{GenKind::X, Bits{s[0]}};
      Word inner = expand_letter(base, exp, alphabet);
      Word conj = s[0] == 0 ? xpow(-n) : xpow(n);
      return conjugate(inner, conj);
    }
    if (s == Bits{1, 0}) {
      Word base = letter_word(gen_x1, 2) * xpow(-1) * letter_word(gen_x1, -1) *
                  xpow(1) * letter_word(gen_x1, -1);
      Word out;
      for (long i = 0; i < labs(exp); ++i) out = out * base;
      return exp > 0 ? out : out.inverse();
    }
    Word f = f_word(s);
    return conjugate(expand_letter(Gen{GenKind::X, Bits{1, 0}}, exp, alphabet), f);
  }
  // y generators
  if (s.is_constant()) {
    if (alphabet == FiniteAlphabet::three)
      throw error("not a word over the three-letter alphabet: " + g.str() +
                  " has a constant subscript");
    if (s.empty()) {
      // y = x y_0 y_10^-1 y_11
      Word base = xpow(1) * letter_word(Gen{GenKind::Y, Bits{0}}, 1) *
                  letter_word(Gen{GenKind::Y, Bits{1, 0}}, -1) *
                  letter_word(Gen{GenKind::Y, Bits{1, 1}}, 1);
      Word expanded = expand_word(base, alphabet);
      Word out;
      for (long i = 0; i < labs(exp); ++i) out = out * expanded;
      return exp > 0 ? out : out.inverse();
    }
    if (s.size() == 1) return letter_word(g, exp);
    long n = static_cast<long>(s.size()) - 1;
    Gen base{GenKind::Y, Bits{s[0]}};
    Word conj = s[0] == 0 ? xpow(-n) : xpow(n);
    return conjugate(letter_word(base, exp), conj);
  }
  if (s == Bits{1, 0}) return letter_word(g, exp);
  Word f = f_word(s);
  return conjugate(letter_word(Gen{GenKind::Y, Bits{1, 0}}, exp), f);
}

std::vector<Bits> all_words_up_to(std::size_t bound) {
  std::vector<Bits> out{Bits{}};
  for (std::size_t len = 1; len <= bound; ++len)
    for (std::size_t bitsv = 0; bitsv < (static_cast<std::size_t>(1) << len); ++bitsv) {
      std::vector<uint8_t> d(len);
      for (std::size_t i = 0; i < len; ++i) d[i] = (bitsv >> (len - 1 - i)) & 1;
      out.push_back(Bits(std::move(d)));
    }
  return out;
}

Word w_x(const Bits& s, long e = 1) { return letter_word(Gen{GenKind::X, s}, e); }
Word w_y(const Bits& s, long e = 1) { return letter_word(Gen{GenKind::Y, s}, e); }

}  // namespace

Word expand_to_finite_generators(const Word& w, FiniteAlphabet alphabet) {
  return expand_word(w, alphabet).canonical();
}

std::vector<RelationInstance> relation_instances(int family, std::size_t bound) {
  if (bound > 8) throw error("subscript bound capped at 8");
  std::vector<RelationInstance> out;
  auto words = all_words_up_to(bound);
  switch (family) {
    case 1:
      for (const Bits& s : words)
        out.push_back({w_x(s, 2), w_x(s.cat(Bits{0})) * w_x(s) * w_x(s.cat(Bits{1}))});
      break;
    case 2:
      for (const Bits& t : words)
        for (const Bits& s : words) {
          auto img = partial_apply_finite(t, s, 1);
          if (!img) continue;
          out.push_back({w_x(t) * w_x(s), w_x(s) * w_x(*img)});
        }
      break;
    case 3:
      for (const Bits& t : words)
        for (const Bits& s : words) {
          auto img = partial_apply_finite(t, s, 1);
          if (!img) continue;
          out.push_back({w_y(t) * w_x(s), w_x(s) * w_y(*img)});
        }
      break;
    case 4:
      for (const Bits& s : words)
        for (const Bits& t : words) {
          if (!is_incompatible(s, t)) continue;
          out.push_back({w_y(s) * w_y(t), w_y(t) * w_y(s)});
        }
      break;
    case 5:
      for (const Bits& s : words)
        out.push_back({w_y(s), w_x(s) * w_y(s.cat(Bits{0})) * w_y(s.cat(Bits{1, 0}), -1) *
                                   w_y(s.cat(Bits{1, 1}))});
      break;
    default:
      throw error("relation family must be 1..5");
  }
  return out;
}

std::vector<RelationInstance> nine_relations(NineForm form) {
  auto W = [](const std::string& s) { return Word::parse(s); };
  if (form == NineForm::xy) {
    return {
        {W("x[1] x^-2 x[1] x"), W("x^-1 x[1] x x[1] x^-1")},
        {W("x[1] x^-3 x[1] x^2"), W("x^-2 x[1] x^2 x[1] x^-1")},
        {W("y[10] x[0]"), W("x[0] y[10]")},
        {W("y[10] x[01]"), W("x[01] y[10]")},
        {W("y[10] x[11]"), W("x[11] y[10]")},
        {W("y[10] x[111]"), W("x[111] y[10]")},
        {W("y[01] y[10]"), W("y[10] y[01]")},
        {W("y[001] y[10]"), W("y[10] y[001]")},
        {W("y[10]"), W("x[10] y[100] y[1010]^-1 y[1011]")},
    };
  }
  // Relations 4 and 9 are rewritten from the subscript alphabet through the
  // generator definitions; sign-garbled transcriptions of these two circulate
  // but do not define the same homeomorphisms.
  Word x01 = expand_to_finite_generators(W("x[01]"), FiniteAlphabet::three);
  Word r9 = expand_to_finite_generators(W("x[10] y[100] y[1010]^-1 y[1011]"),
                                        FiniteAlphabet::three);
  return {
      {W("b a^-2 b a"), W("a^-1 b a b a^-1")},
      {W("b a^-1 a^-2 b a^2"), W("a^-2 b a^2 b a^-1")},
      {W("c a^2 b^-1 a^-1"), W("a^2 b^-1 a^-1 c")},
      {W("c") * x01, x01 * W("c")},
      {W("c a^-1 b a"), W("a^-1 b a c")},
      {W("c a^-2 b a^2"), W("a^-2 b a^2 c")},
      {W("c a c a^-1"), W("a c a^-1 c")},
      {W("c a^2 c a^-2"), W("a^2 c a^-2 c")},
      {W("c"), r9},
  };
}

}  // namespace ppg
