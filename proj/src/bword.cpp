#include "ppg/bword.hpp"

namespace ppg {

std::size_t BWord::count_y() const {
  std::size_t n = 0;
  for (BSym s : syms_)
    if (is_y(s)) ++n;
  return n;
}

std::size_t BWord::y_position(std::size_t k) const {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < syms_.size(); ++i)
    if (is_y(syms_[i]) && seen++ == k) return i;
  throw error("no such y-occurrence");
}

BWord BWord::append(const Bits& u) const {
  std::vector<BSym> s = syms_;
  for (uint8_t b : u.digits()) s.push_back(b ? BSym::d1 : BSym::d0);
  return BWord(std::move(s));
}

BWord BWord::mirrored() const {
  std::vector<BSym> s = syms_;
  for (BSym& x : s) switch (x) {
      case BSym::d0: x = BSym::d1; break;
      case BSym::d1: x = BSym::d0; break;
      case BSym::yp: x = BSym::yn; break;
      case BSym::yn: x = BSym::yp; break;
    }
  return BWord(std::move(s));
}

std::string BWord::str() const {
  std::string out;
  for (BSym s : syms_) switch (s) {
      case BSym::d0: out += '0'; break;
      case BSym::d1: out += '1'; break;
      case BSym::yp: out += 'y'; break;
      case BSym::yn: out += 'Y'; break;
    }
  return out;
}

BWord BWord::parse(const std::string& s) {
  std::vector<BSym> syms;
  for (std::size_t i = 0; i < s.size(); ++i) switch (s[i]) {
      case '0': syms.push_back(BSym::d0); break;
      case '1': syms.push_back(BSym::d1); break;
      case 'y': syms.push_back(BSym::yp); break;
      case 'Y': syms.push_back(BSym::yn); break;
      default: throw parse_error("expected one of 0 1 y Y", i);
    }
  return BWord(std::move(syms));
}

namespace {

// Advancement step at symbol index p; returns the new symbol run replacing
// the consumed one, or nothing when the following digits are insufficient.
struct Step {
  std::vector<BSym> emit;
  std::size_t consumed;  // digits after p
};

std::optional<Step> step_at(const std::vector<BSym>& s, std::size_t p) {
  BSym y = s[p];
  auto digit = [&](std::size_t i) -> std::optional<uint8_t> {
    if (i >= s.size() || is_y(s[i])) return std::nullopt;
    return s[i] == BSym::d1 ? 1 : 0;
  };
  auto d0 = digit(p + 1);
  if (!d0) return std::nullopt;
  if (y == BSym::yp) {
    if (*d0 == 1) return Step{{BSym::d1, BSym::d1, BSym::yp}, 1};
    auto d1 = digit(p + 2);
    if (!d1) return std::nullopt;
    if (*d1 == 0) return Step{{BSym::d0, BSym::yp}, 2};
    return Step{{BSym::d1, BSym::d0, BSym::yn}, 2};
  }
  if (*d0 == 0) return Step{{BSym::d0, BSym::d0, BSym::yn}, 1};
  auto d1 = digit(p + 2);
  if (!d1) return std::nullopt;
  if (*d1 == 0) return Step{{BSym::d0, BSym::d1, BSym::yp}, 2};
  return Step{{BSym::d1, BSym::yn}, 2};
}

}  // namespace

bool can_advance(const BWord& w, std::size_t occurrence) {
  return step_at(w.symbols(), w.y_position(occurrence)).has_value();
}

BWord advance(const BWord& w, std::size_t occurrence) {
  std::size_t p = w.y_position(occurrence);
  auto st = step_at(w.symbols(), p);
  if (!st) throw error("occurrence cannot advance: following digits missing");
  std::vector<BSym> out(w.symbols().begin(), w.symbols().begin() + static_cast<long>(p));
  out.insert(out.end(), st->emit.begin(), st->emit.end());
  out.insert(out.end(), w.symbols().begin() + static_cast<long>(p + 1 + st->consumed),
             w.symbols().end());
  return BWord(std::move(out));
}

bool has_potential_cancellation(const BWord& w, std::size_t occurrence) {
  BWord cur = w;
  while (true) {
    std::size_t p = cur.y_position(occurrence);
    if (p + 1 < cur.size() && is_y(cur.symbols()[p + 1]))
      return cur.symbols()[p] != cur.symbols()[p + 1];
    auto st = step_at(cur.symbols(), p);
    if (!st) return false;
    cur = advance(cur, occurrence);
  }
}

bool has_potential_cancellation(const BWord& w) {
  for (std::size_t k = 0; k < w.count_y(); ++k)
    if (has_potential_cancellation(w, k)) return true;
  return false;
}

BWord advance_all_no_cancel(const BWord& w) {
  if (has_potential_cancellation(w)) throw error("word has a potential cancellation");
  BWord cur = w;
  for (std::size_t k = 0; k < cur.count_y(); ++k)
    if (can_advance(cur, k)) cur = advance(cur, k);
  if (has_potential_cancellation(cur))
    throw error("advancement broke the no-cancellation property");
  return cur;
}

namespace {

void advance_max(BWord& w, std::size_t occurrence) {
  while (can_advance(w, occurrence)) w = advance(w, occurrence);
}

}  // namespace

AdvanceToPower advance_to_power(const BWord& w) {
  if (has_potential_cancellation(w)) throw error("word has a potential cancellation");
  std::size_t n = w.count_y();
  if (n == 0) throw error("no y-symbols to collect");

  BWord cur = w;
  Bits appended;
  // Collect occurrences into a trailing positive block, rightmost first.
  for (std::size_t k = n; k-- > 0;) {
    advance_max(cur, k);
    std::size_t p = cur.y_position(k);
    bool at_block = p + 1 < cur.size() && is_y(cur.symbols()[p + 1]);
    bool positive = cur.symbols()[p] == BSym::yp;
    if (at_block) {
      if (!positive) throw error("cancellation surfaced while collecting");
      continue;
    }
    // Blocked: either at the word end or one digit short of the next block.
    std::size_t block = n - 1 - k;  // y-symbols already collected to the right
    Bits u;
    if (p + 1 == cur.size())
      u = positive ? Bits{} : Bits{1, 0};
    else
      u = Bits::zeros(static_cast<std::size_t>(1) << block);
    appended = appended.cat(u);
    cur = cur.append(u);
    for (std::size_t j = n; j-- > k;) advance_max(cur, j);
    p = cur.y_position(k);
    if (cur.symbols()[p] != BSym::yp ||
        (p + 1 < cur.size() && !is_y(cur.symbols()[p + 1])))
      throw error("collection step failed to reach the block");
  }
  // cur must now be digits followed by n positive y's
  std::size_t head = cur.size() - n;
  std::vector<uint8_t> s;
  for (std::size_t i = 0; i < head; ++i) {
    if (is_y(cur.symbols()[i])) throw error("stray y-symbol before the block");
    s.push_back(cur.symbols()[i] == BSym::d1 ? 1 : 0);
  }
  for (std::size_t i = head; i < cur.size(); ++i)
    if (cur.symbols()[i] != BSym::yp) throw error("block is not positive");
  return AdvanceToPower{appended, Bits(std::move(s)), n};
}

bool advances_to(const BWord& w, const BWord& target) {
  BWord cur = w;
  for (std::size_t steps = 0; steps < 1u << 22; ++steps) {
    if (cur == target) return true;
    bool moved = false;
    for (std::size_t k = cur.count_y(); k-- > 0;) {
      if (can_advance(cur, k)) {
        cur = advance(cur, k);
        moved = true;
        break;
      }
    }
    if (!moved) return false;
  }
  return false;
}

Seq lim(const BWord& w, const Seq& xi) {
  Seq cur = xi;
  for (std::size_t i = w.size(); i-- > 0;) switch (w.symbols()[i]) {
      case BSym::d0: cur = cur.prepend(Bits{0}); break;
      case BSym::d1: cur = cur.prepend(Bits{1}); break;
      case BSym::yp: cur = apply_y(cur, 1); break;
      case BSym::yn: cur = apply_y(cur, -1); break;
    }
  return cur;
}

}  // namespace ppg
