#pragma once

#include "ppg/action.hpp"
#include "ppg/seq.hpp"

namespace ppg {

/// Symbols of the four-letter alphabet {0, 1, y, y^-1}.
enum class BSym : uint8_t { d0, d1, yp, yn };

inline bool is_y(BSym s) { return s == BSym::yp || s == BSym::yn; }

/// A word over {0, 1, y, y^-1}. Advancement pushes y-symbols to the right by
/// the transducer rules; it is the symbolic form of evaluating powers of y.
class BWord {
 public:
  BWord() = default;
  explicit BWord(std::vector<BSym> syms) : syms_(std::move(syms)) {}

  const std::vector<BSym>& symbols() const { return syms_; }
  std::size_t size() const { return syms_.size(); }
  bool operator==(const BWord&) const = default;

  std::size_t count_y() const;
  /// Symbol index of the k-th occurrence of y^+-; throws if out of range.
  std::size_t y_position(std::size_t k) const;

  BWord append(const Bits& u) const;
  /// The involution swapping y with y^-1 and 0 with 1.
  BWord mirrored() const;

  /// Text form: symbols 0 1 y Y, no separators.
  std::string str() const;
  static BWord parse(const std::string& s);

 private:
  std::vector<BSym> syms_;
};

/// Whether the k-th occurrence of y^+- can advance one step here.
bool can_advance(const BWord& w, std::size_t occurrence);

/// One advancement of the k-th occurrence of y^+-.
/// Rejects occurrences whose following digits are missing or insufficient.
BWord advance(const BWord& w, std::size_t occurrence);

/// True iff some run of advances of this occurrence creates an adjacent
/// opposite pair y y^-1 or y^-1 y.
bool has_potential_cancellation(const BWord& w, std::size_t occurrence);
bool has_potential_cancellation(const BWord& w);

/// One left-to-right pass advancing every advanceable occurrence once.
/// Requires (and, by the calculus, preserves) no potential cancellations;
/// the output property is asserted.
BWord advance_all_no_cancel(const BWord& w);

struct AdvanceToPower {
  Bits appended;  // u
  Bits prefix;    // s
  std::size_t n;  // number of y-symbols, all positive in the result
};

/// A suffix u such that w u advances to s y^n where n counts the y-symbols
/// of w. Requires no potential cancellations and at least one y-symbol.
AdvanceToPower advance_to_power(const BWord& w);

/// Replay check: advancing w by the schedule "rightmost advanceable
/// occurrence first" reaches target exactly.
bool advances_to(const BWord& w, const BWord& target);

/// The limit sequence of w followed by xi: digits prepend, y-symbols act.
Seq lim(const BWord& w, const Seq& xi);

}  // namespace ppg
