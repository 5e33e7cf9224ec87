#include "ppg/action.hpp"

#include <cctype>
#include <map>

namespace ppg {

std::string Gen::str() const {
  std::string s(kind == GenKind::X ? "x" : "y");
  if (!sub.empty()) s += "[" + sub.str() + "]";
  return s;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_)
    if (l.exp == 0) throw error("letter exponent must be nonzero");
}

Word Word::canonical() const {
  std::vector<Letter> out;
  for (Letter l : letters_) {
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  return Word(std::move(out));
}

Word Word::one(Gen g, long exp) { return Word({Letter{std::move(g), exp}}); }

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const Letter& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(all));
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    rev.push_back(Letter{it->gen, -it->exp});
  return Word(std::move(rev));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.gen.str();
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

namespace {

Letter parse_term(const std::string& t, std::size_t base) {
  std::size_t i = 0;
  Gen g;
  if (t[i] == 'x' || t[i] == 'a')
    g.kind = GenKind::X;
  else if (t[i] == 'y' || t[i] == 'c')
    g.kind = GenKind::Y;
  else if (t[i] == 'b')
    g.kind = GenKind::X;
  else
    throw parse_error("expected generator x, y, a, b or c", base + i);
  if (t[i] == 'b') g.sub = Bits{1};
  if (t[i] == 'c') g.sub = Bits{1, 0};
  char head = t[i];
  ++i;
  if (i < t.size() && t[i] == '[') {
    if (head == 'a' || head == 'b' || head == 'c')
      throw parse_error("aliases take no subscript", base + i);
    ++i;
    std::vector<uint8_t> d;
    while (i < t.size() && (t[i] == '0' || t[i] == '1'))
      d.push_back(static_cast<uint8_t>(t[i++] - '0'));
    if (i >= t.size() || t[i] != ']')
      throw parse_error("expected ']' after subscript", base + i);
    ++i;
    g.sub = Bits(std::move(d));
  }
  long exp = 1;
  if (i < t.size() && t[i] == '^') {
    ++i;
    bool neg = false;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) neg = t[i++] == '-';
    if (i >= t.size() || !isdigit(static_cast<unsigned char>(t[i])))
      throw parse_error("expected exponent digits", base + i);
    long v = 0;
    while (i < t.size() && isdigit(static_cast<unsigned char>(t[i])))
      v = v * 10 + (t[i++] - '0');
    exp = neg ? -v : v;
    if (exp == 0) throw parse_error("exponent must be nonzero", base + i);
  }
  if (i != t.size()) throw parse_error("unexpected character in term", base + i);
  return Letter{std::move(g), exp};
}

}  // namespace

Word Word::parse(const std::string& text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !isspace(static_cast<unsigned char>(text[j]))) ++j;
    letters.push_back(parse_term(text.substr(i, j - i), i));
    i = j;
  }
  return Word(std::move(letters));
}

Seq apply_x(const Seq& xi, int sign) {
  Bits head = xi.take(2);
  if (sign > 0) {
    if (head[0] == 0 && head[1] == 0) return xi.drop(2).prepend(Bits{0});
    if (head[0] == 0 && head[1] == 1) return xi.drop(2).prepend(Bits{1, 0});
    return xi.drop(1).prepend(Bits{1, 1});
  }
  if (head[0] == 0) return xi.drop(1).prepend(Bits{0, 0});
  if (head[1] == 0) return xi.drop(2).prepend(Bits{0, 1});
  return xi.drop(2).prepend(Bits{1});
}

Seq apply_y(const Seq& xi, int sign) {
  // Two-state transducer; states are y and y^-1. A step consumes one or two
  // input digits and emits one or two output digits. Cycle detection on
  // (state, offset within the input period) makes the output periodic.
  std::vector<uint8_t> out;
  int state = sign;
  std::size_t idx = 0;
  std::size_t pre_len = xi.preperiod().size(), per_len = xi.period().size();
  std::map<std::pair<int, std::size_t>, std::size_t> seen;  // -> out length
  while (true) {
    if (idx >= pre_len) {
      auto key = std::make_pair(state, (idx - pre_len) % per_len);
      auto it = seen.find(key);
      if (it != seen.end()) {
        std::vector<uint8_t> pre(out.begin(), out.begin() + static_cast<long>(it->second));
        std::vector<uint8_t> per(out.begin() + static_cast<long>(it->second), out.end());
        return Seq(Bits(std::move(pre)), Bits(std::move(per)));
      }
      seen.emplace(key, out.size());
    }
    uint8_t d0 = xi.digit(idx);
    if (state > 0) {
      if (d0 == 1) {
        out.insert(out.end(), {1, 1});
        idx += 1;
      } else {
        uint8_t d1 = xi.digit(idx + 1);
        if (d1 == 0) {
          out.push_back(0);
        } else {
          out.insert(out.end(), {1, 0});
          state = -1;
        }
        idx += 2;
      }
    } else {
      if (d0 == 0) {
        out.insert(out.end(), {0, 0});
        idx += 1;
      } else {
        uint8_t d1 = xi.digit(idx + 1);
        if (d1 == 0) {
          out.insert(out.end(), {0, 1});
          state = 1;
        } else {
          out.push_back(1);
        }
        idx += 2;
      }
    }
  }
}

Seq apply_generator(const Gen& g, long n, const Seq& xi) {
  if (n == 0) return xi;
  if (!xi.starts_with(g.sub)) return xi;
  Seq eta = xi.drop(g.sub.size());
  int sign = n < 0 ? -1 : 1;
  long reps = n < 0 ? -n : n;
  for (long i = 0; i < reps; ++i)
    eta = g.kind == GenKind::X ? apply_x(eta, sign) : apply_y(eta, sign);
  return eta.prepend(g.sub);
}

Seq evaluate(const Word& w, const Seq& xi) {
  Seq cur = xi;
  for (const Letter& l : w.letters()) cur = apply_generator(l.gen, l.exp, cur);
  return cur;
}

std::optional<Bits> partial_apply_finite(const Bits& t, const Bits& s, int sign) {
  switch (prefix_relation(t, s)) {
    case PrefixRel::incompatible:
      return t;
    case PrefixRel::equal:
    case PrefixRel::prefix:
      return std::nullopt;
    case PrefixRel::extension:
      break;
  }
  std::size_t n = s.size(), len = t.size() - n;
  auto build = [&](std::initializer_list<uint8_t> head, std::size_t consumed) {
    std::vector<uint8_t> out;
    out.reserve(t.size() + 1);
    out.insert(out.end(), t.digits().begin(), t.digits().begin() + static_cast<long>(n));
    out.insert(out.end(), head);
    out.insert(out.end(), t.digits().begin() + static_cast<long>(n + consumed),
               t.digits().end());
    return Bits(std::move(out));
  };
  if (sign > 0) {
    if (len >= 1 && t[n] == 1) return build({1, 1}, 1);
    if (len >= 2 && t[n + 1] == 0) return build({0}, 2);
    if (len >= 2) return build({1, 0}, 2);
    return std::nullopt;  // the stripped part is empty or the single digit 0
  }
  if (len >= 1 && t[n] == 0) return build({0, 0}, 1);
  if (len >= 2 && t[n + 1] == 0) return build({0, 1}, 2);
  if (len >= 2) return build({1}, 2);
  return std::nullopt;  // the stripped part is empty or the single digit 1
}

std::optional<Bits> partial_apply_finite(const Bits& t, const Gen& g, int sign) {
  if (g.kind != GenKind::X) throw error("partial action is defined for X generators");
  return partial_apply_finite(t, g.sub, sign);
}

std::optional<Bits> partial_apply_word(const Bits& t, const Word& w) {
  Bits cur = t;
  for (const Letter& l : w.letters()) {
    if (l.gen.kind != GenKind::X) throw error("partial action needs an X-word");
    int sign = l.exp < 0 ? -1 : 1;
    for (long i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) {
      auto next = partial_apply_finite(cur, l.gen.sub, sign);
      if (!next) return std::nullopt;
      cur = *next;
    }
  }
  return cur;
}

}  // namespace ppg
