#include "ppg/stdform.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>

namespace ppg {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::push_yx: return "push_yx";
    case Rule::expand_pos: return "expand_pos";
    case Rule::expand_neg: return "expand_neg";
    case Rule::swap_yy: return "swap_yy";
    case Rule::split: return "split";
    case Rule::merge: return "merge";
    case Rule::cancel: return "cancel";
  }
  return "?";
}

namespace {

long sgn(long n) { return n < 0 ? -1 : 1; }

/// The working word plus trace hook. Every mutation is one legal substitution
/// with its side condition checked at application time.
class Engine {
 public:
  Engine(std::vector<Letter> letters, Trace* trace)
      : w_(std::move(letters)), trace_(trace) {}

  const std::vector<Letter>& w() const { return w_; }
  const Letter& at(std::size_t i) const { return w_[i]; }
  std::size_t size() const { return w_.size(); }
  std::vector<Letter> take() && { return std::move(w_); }

  // y_t^i x_s^{+-1}  =>  x_s^{+-1} y_{t.x_s^{+-1}}^i
  void push_yx(std::size_t i) {
    need(i + 1);
    Letter &y = w_[i], &x = w_[i + 1];
    if (y.gen.kind != GenKind::Y || x.gen.kind != GenKind::X || labs(x.exp) != 1)
      throw error("push_yx needs y_t^i x_s^{+-1}");
    if (is_incompatible(y.gen.sub, x.gen.sub)) {
      std::swap(w_[i], w_[i + 1]);  // the subscript image is t itself
    } else {
      auto img = partial_apply_finite(y.gen.sub, x.gen.sub, static_cast<int>(x.exp));
      if (!img) throw depth_error("t.x_s undefined at position " + std::to_string(i));
      y.gen.sub = std::move(*img);
      std::swap(w_[i], w_[i + 1]);
    }
    record(Rule::push_yx, i, 0);
  }

  // y_s^n (n>0) => x_s y_{s0} y_{s10}^-1 y_{s11} y_s^{n-1}  and the mirror
  // y_s^n (n<0) => x_s^-1 y_{s00}^-1 y_{s01} y_{s1}^-1 y_s^{n+1}.
  // Returns the number of letters added.
  std::size_t expand(std::size_t i) {
    need(i);
    Letter y = w_[i];
    if (y.gen.kind != GenKind::Y) throw error("expand needs a y letter");
    const Bits& s = y.gen.sub;
    std::vector<Letter> rep;
    if (y.exp > 0) {
      rep = {Letter{Gen{GenKind::X, s}, 1},
             Letter{Gen{GenKind::Y, s.cat(Bits{0})}, 1},
             Letter{Gen{GenKind::Y, s.cat(Bits{1, 0})}, -1},
             Letter{Gen{GenKind::Y, s.cat(Bits{1, 1})}, 1}};
      if (y.exp > 1) rep.push_back(Letter{y.gen, y.exp - 1});
    } else {
      rep = {Letter{Gen{GenKind::X, s}, -1},
             Letter{Gen{GenKind::Y, s.cat(Bits{0, 0})}, -1},
             Letter{Gen{GenKind::Y, s.cat(Bits{0, 1})}, 1},
             Letter{Gen{GenKind::Y, s.cat(Bits{1})}, -1}};
      if (y.exp < -1) rep.push_back(Letter{y.gen, y.exp + 1});
    }
    std::size_t added = rep.size() - 1;
    w_.erase(w_.begin() + static_cast<long>(i));
    w_.insert(w_.begin() + static_cast<long>(i), rep.begin(), rep.end());
    record(y.exp > 0 ? Rule::expand_pos : Rule::expand_neg, i, 0);
    return added;
  }

  void swap_yy(std::size_t i) {
    need(i + 1);
    const Letter &a = w_[i], &b = w_[i + 1];
    if (a.gen.kind != GenKind::Y || b.gen.kind != GenKind::Y ||
        !is_incompatible(a.gen.sub, b.gen.sub))
      throw error("swap_yy needs adjacent y letters with incompatible subscripts");
    std::swap(w_[i], w_[i + 1]);
    record(Rule::swap_yy, i, 0);
  }

  void split(std::size_t i, long first) {
    need(i);
    Letter l = w_[i];
    long rest = l.exp - first;
    if (first == 0 || rest == 0 || sgn(first) != sgn(l.exp) || sgn(rest) != sgn(l.exp))
      throw error("split parts must be nonzero with the exponent's sign");
    w_[i].exp = first;
    w_.insert(w_.begin() + static_cast<long>(i) + 1, Letter{l.gen, rest});
    record(Rule::split, i, first);
  }

  /// Merge w[i] and w[i+1] (same generator); deletes both on cancellation.
  /// Returns the number of letters removed (1 or 2).
  std::size_t merge(std::size_t i) {
    need(i + 1);
    if (!(w_[i].gen == w_[i + 1].gen)) throw error("merge needs equal generators");
    long sum = w_[i].exp + w_[i + 1].exp;
    if (sum == 0) {
      w_.erase(w_.begin() + static_cast<long>(i), w_.begin() + static_cast<long>(i) + 2);
      record(Rule::cancel, i, 0);
      return 2;
    }
    w_[i].exp = sum;
    w_.erase(w_.begin() + static_cast<long>(i) + 1);
    record(Rule::merge, i, 0);
    return 1;
  }

 private:
  void need(std::size_t i) const {
    if (i >= w_.size()) throw error("rule position out of range");
  }
  void record(Rule r, std::size_t i, long arg) {
    if (++steps_ > step_cap_) throw error("rewriting exceeded the step budget");
    if (!trace_) return;
    std::string line = "rule=" + std::string(rule_name(r)) + " at=" + std::to_string(i);
    if (r == Rule::split) line += " arg=" + std::to_string(arg);
    line += " word=" + Word(w_).str();
    trace_->lines.push_back(std::move(line));
  }

  std::vector<Letter> w_;
  Trace* trace_;
  std::size_t steps_ = 0;
  static constexpr std::size_t step_cap_ = 400'000'000;
};

struct Region {
  std::size_t xend;  // first index of the Y-region
  std::size_t yend;  // one past the Y-region
};

// Move the x-letter at position i left across the Y-letters down to `stop`;
// the x ends at `stop`.
void extract_x_left(Engine& e, std::size_t i, std::size_t stop) {
  for (std::size_t j = i; j > stop; --j) e.push_yx(j - 1);
}

std::optional<std::size_t> find_sub(const Engine& e, const Bits& sub,
                                    std::size_t from, std::size_t upto) {
  for (std::size_t i = from; i < upto; ++i)
    if (e.at(i).gen.kind == GenKind::Y && e.at(i).gen.sub == sub) return i;
  return std::nullopt;
}

// One-unit expansion of the entry at position i inside a standard form,
// clearing the blocking child subscript first when present. New children
// merge leftward with existing equal subscripts.
void expand_unit_in_form(Engine& e, Region& r, std::size_t i, int guard = 0) {
  if (guard > 64) throw error("blocker clearing recursed too deep");
  Bits t = e.at(i).gen.sub;
  Bits blocker = t.cat(Bits{e.at(i).exp > 0 ? 0 : 1});
  while (true) {
    auto b = find_sub(e, blocker, r.xend, i);
    if (!b) break;
    expand_unit_in_form(e, r, *b, guard + 1);
    auto self = find_sub(e, t, r.xend, r.yend);
    if (!self) throw error("entry vanished while clearing its blocker");
    i = *self;
  }
  r.yend += e.expand(i);
  extract_x_left(e, i, r.xend);
  ++r.xend;
  // children sit at [i+1, i+4); each merges with the earlier occurrence of
  // its subscript when one exists (the letters between are incompatible)
  std::vector<Bits> kids;
  for (std::size_t k = 1; k <= 3; ++k) kids.push_back(e.at(i + k).gen.sub);
  for (const Bits& sub : kids) {
    auto first = find_sub(e, sub, r.xend, r.yend);
    if (!first) continue;
    auto second = find_sub(e, sub, *first + 1, r.yend);
    if (!second) continue;
    for (std::size_t pos = *second; pos > *first + 1; --pos) e.swap_yy(pos - 1);
    r.yend -= e.merge(*first);
  }
}

// Absorb the x-unit at position r.yend into the standard form on [0, r.yend):
// every entry whose subscript image is undefined is expanded first, then the
// letter commutes left through the whole Y-part.
void absorb_x_unit(Engine& e, Region& r) {
  const Bits s = e.at(r.yend).gen.sub;
  int tau = static_cast<int>(e.at(r.yend).exp);
  while (true) {
    std::optional<std::size_t> pick;
    for (std::size_t i = r.xend; i < r.yend; ++i) {
      if (partial_apply_finite(e.at(i).gen.sub, s, tau)) continue;
      if (!pick || e.at(*pick).gen.sub.size() < e.at(i).gen.sub.size()) pick = i;
    }
    if (!pick) break;
    expand_unit_in_form(e, r, *pick);
  }
  extract_x_left(e, r.yend, r.xend);
  ++r.xend;
  ++r.yend;
}

// Absorb the y-unit at position r.yend: expand away proper initial parts of
// its subscript, then merge with an equal entry or keep it as the last one.
void absorb_y_unit(Engine& e, Region& r) {
  const Bits u = e.at(r.yend).gen.sub;
  while (true) {
    std::optional<std::size_t> pick;
    for (std::size_t i = r.xend; i < r.yend; ++i) {
      if (prefix_relation(e.at(i).gen.sub, u) != PrefixRel::prefix) continue;
      if (!pick || e.at(*pick).gen.sub.size() < e.at(i).gen.sub.size()) pick = i;
    }
    if (!pick) break;
    expand_unit_in_form(e, r, *pick);
  }
  auto partner = find_sub(e, u, r.xend, r.yend);
  if (!partner) {
    ++r.yend;
    return;
  }
  for (std::size_t pos = r.yend; pos > *partner + 1; --pos) e.swap_yy(pos - 1);
  r.yend += 1 - e.merge(*partner);
}

}  // namespace

Word derive_step(const Word& w, const DeriveStep& step, Trace* trace) {
  Engine e(w.letters(), trace);
  switch (step.rule) {
    case Rule::push_yx: e.push_yx(step.at); break;
    case Rule::expand_pos:
    case Rule::expand_neg: e.expand(step.at); break;
    case Rule::swap_yy: e.swap_yy(step.at); break;
    case Rule::split: e.split(step.at, step.arg); break;
    case Rule::merge:
    case Rule::cancel: e.merge(step.at); break;
  }
  return Word(std::move(e).take());
}

StandardForm::StandardForm(Word x_part, std::vector<Letter> y_part)
    : x_(std::move(x_part)), y_(std::move(y_part)) {
  for (const Letter& l : x_.letters())
    if (l.gen.kind != GenKind::X) throw error("X-part contains a y letter");
  for (const Letter& l : y_) {
    if (l.gen.kind != GenKind::Y) throw error("Y-part contains an x letter");
    if (l.exp == 0) throw error("zero exponent in Y-part");
  }
  for (std::size_t i = 0; i < y_.size(); ++i)
    for (std::size_t j = i + 1; j < y_.size(); ++j)
      if (is_prefix(y_[i].gen.sub, y_[j].gen.sub))
        throw error("standard form ordering violated: " + y_[i].gen.str() +
                    " precedes its extension " + y_[j].gen.str());
}

std::optional<std::size_t> StandardForm::depth() const {
  std::optional<std::size_t> d;
  for (const Letter& l : y_)
    if (!d || l.gen.sub.size() < *d) d = l.gen.sub.size();
  return d;
}

Word StandardForm::word() const {
  std::vector<Letter> all = x_.letters();
  all.insert(all.end(), y_.begin(), y_.end());
  return Word(std::move(all));
}

std::string StandardForm::str() const {
  std::string out = x_.empty() ? "1" : x_.str();
  out += " | ";
  out += y_.empty() ? "1" : Word(y_).str();
  return out;
}

namespace {

StandardForm extract(Engine&& e, Region r) {
  // merge adjacent equal x generators; the X-area starts at index 0 here
  for (std::size_t j = 0; j + 1 < r.xend;) {
    if (e.at(j).gen == e.at(j + 1).gen) {
      std::size_t removed = e.merge(j);
      r.xend -= removed;
      r.yend -= removed;
      if (j > 0) --j;
    } else {
      ++j;
    }
  }
  std::vector<Letter> all = std::move(e).take();
  std::vector<Letter> xs(all.begin(), all.begin() + static_cast<long>(r.xend));
  std::vector<Letter> ys(all.begin() + static_cast<long>(r.xend),
                         all.begin() + static_cast<long>(r.yend));
  return StandardForm(Word(std::move(xs)), std::move(ys));
}

void deepen(Engine& e, Region& r, std::size_t min_depth) {
  while (true) {
    std::optional<std::size_t> pick;
    for (std::size_t i = r.xend; i < r.yend; ++i) {
      if (e.at(i).gen.sub.size() >= min_depth) continue;
      if (!pick) {
        pick = i;
        continue;
      }
      const Bits &a = e.at(*pick).gen.sub, &b = e.at(i).gen.sub;
      if (a.size() < b.size() || (a.size() == b.size() && lex_less(a, b))) pick = i;
    }
    if (!pick) return;
    expand_unit_in_form(e, r, *pick);
  }
}

}  // namespace

StandardForm expand_y_to_depth(const Bits& s, int sign, std::size_t l, Trace* trace) {
  Engine e({Letter{Gen{GenKind::Y, s}, sign < 0 ? -1 : 1}}, trace);
  Region r{0, 1};
  while (true) {
    std::optional<std::size_t> shallow;
    for (std::size_t i = r.xend; i < r.yend && !shallow; ++i)
      if (e.at(i).gen.sub.size() < l) shallow = i;
    if (!shallow) break;
    r.yend += e.expand(*shallow);
    extract_x_left(e, *shallow, r.xend);
    ++r.xend;
  }
  return extract(std::move(e), r);
}

StandardForm push_x_left(const StandardForm& form, const Word& xword, Trace* trace) {
  std::vector<Letter> letters = form.word().letters();
  std::size_t xlen = form.x_part().size(), ylen = form.y_part().size();
  for (const Letter& l : xword.letters()) {
    if (l.gen.kind != GenKind::X) throw error("trailing word must be an X-word");
    letters.push_back(l);
  }
  Engine e(std::move(letters), trace);
  Region r{xlen, xlen + ylen};
  while (r.yend < e.size()) {
    if (labs(e.at(r.yend).exp) != 1) e.split(r.yend, sgn(e.at(r.yend).exp));
    extract_x_left(e, r.yend, r.xend);
    ++r.xend;
    ++r.yend;
  }
  return extract(std::move(e), r);
}

StandardForm to_standard_form(const Word& w, std::size_t min_depth, Trace* trace) {
  Engine e(w.letters(), trace);
  Region r{0, 0};
  while (r.yend < e.size()) {
    if (labs(e.at(r.yend).exp) != 1) e.split(r.yend, sgn(e.at(r.yend).exp));
    if (e.at(r.yend).gen.kind == GenKind::X)
      absorb_x_unit(e, r);
    else
      absorb_y_unit(e, r);
  }
  deepen(e, r, min_depth);
  return extract(std::move(e), r);
}

bool is_exposed(const Bits& s, const StandardForm& form) {
  std::vector<Bits> subs;
  for (const Letter& l : form.y_part()) subs.push_back(l.gen.sub);
  // witness search: u extends s; offenders are subscripts compatible with u
  // that are not initial parts of s
  std::function<bool(const Bits&)> ok = [&](const Bits& u) -> bool {
    bool any = false;
    for (const Bits& t : subs) {
      auto rel = prefix_relation(t, u);
      if (rel == PrefixRel::incompatible) continue;
      if (is_prefix(t, s)) continue;
      any = true;
      if (rel == PrefixRel::equal || rel == PrefixRel::prefix) return false;
    }
    if (!any) return true;
    return ok(u.cat(Bits{0})) || ok(u.cat(Bits{1}));
  };
  return ok(s);
}

Measure measure_of(const StandardForm& form) {
  Measure m;
  std::vector<Bits> subs;
  for (const Letter& l : form.y_part()) {
    subs.push_back(l.gen.sub);
    m.exponents[l.gen.sub] = static_cast<unsigned long>(labs(l.exp));
  }
  m.tree_size = minimal_cover(subs).size();
  return m;
}

bool measure_less(const Measure& a, const Measure& b) {
  if (a.tree_size != b.tree_size) return a.tree_size < b.tree_size;
  // compare exponents at the lex-greatest subscript where they differ
  std::vector<Bits> all;
  for (const auto& [s, k] : a.exponents) all.push_back(s);
  for (const auto& [s, k] : b.exponents) all.push_back(s);
  std::sort(all.begin(), all.end(), lex_less);
  auto exp_of = [](const Measure& m, const Bits& s) -> unsigned long {
    auto it = m.exponents.find(s);
    return it == m.exponents.end() ? 0 : it->second;
  };
  for (std::size_t i = all.size(); i-- > 0;) {
    if (i > 0 && all[i] == all[i - 1]) continue;
    unsigned long ka = exp_of(a, all[i]), kb = exp_of(b, all[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

bool is_sufficiently_expanded(const StandardForm& form) {
  auto occurs = [&](const Bits& s) {
    for (const Letter& l : form.y_part())
      if (l.gen.sub == s) return true;
    return false;
  };
  for (const Letter& l : form.y_part()) {
    if (is_exposed(l.gen.sub, form)) continue;
    Bits child = l.gen.sub.cat(Bits{l.exp > 0 ? 0 : 1});
    if (!occurs(child)) return false;
  }
  return true;
}

StandardForm sufficiently_expand(const StandardForm& form, Trace* trace,
                                 std::vector<Measure>* measures) {
  StandardForm cur = form;
  Measure m = measure_of(cur);
  if (measures) measures->push_back(m);
  for (std::size_t round = 0; round < 100000; ++round) {
    auto occurs = [&](const Bits& s) {
      for (const Letter& l : cur.y_part())
        if (l.gen.sub == s) return true;
      return false;
    };
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < cur.y_part().size(); ++i) {
      const Letter& l = cur.y_part()[i];
      Bits child = l.gen.sub.cat(Bits{l.exp > 0 ? 0 : 1});
      if (occurs(child) || is_exposed(l.gen.sub, cur)) continue;
      if (!pick || lex_less(cur.y_part()[*pick].gen.sub, l.gen.sub)) pick = i;
    }
    if (!pick) return cur;
    Engine e(cur.word().letters(), trace);
    Region r{cur.x_part().size(), cur.x_part().size() + cur.y_part().size()};
    expand_unit_in_form(e, r, r.xend + *pick);
    cur = extract(std::move(e), r);
    Measure next = measure_of(cur);
    if (!measure_less(next, m))
      throw error("expansion failed to decrease the termination measure");
    m = std::move(next);
    if (measures) measures->push_back(m);
  }
  throw error("sufficient expansion exceeded the round budget");
}

}  // namespace ppg
