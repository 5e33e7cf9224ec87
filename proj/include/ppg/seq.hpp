#pragma once

#include <random>

#include "ppg/bits.hpp"

namespace ppg {

/// An infinite binary sequence of the form u (v)^inf, held in canonical form:
/// the period v is primitive and the preperiod u is as short as possible.
/// Canonical values compare structurally; two values denote the same sequence
/// iff they are equal.
class Seq {
 public:
  /// The constant sequence (b)^inf.
  static Seq constant(uint8_t b) { return Seq(Bits{}, Bits{static_cast<int>(b & 1)}); }

  Seq(Bits preperiod, Bits period);

  const Bits& preperiod() const { return pre_; }
  const Bits& period() const { return per_; }

  uint8_t digit(std::size_t i) const {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  Bits take(std::size_t n) const;

  bool starts_with(const Bits& s) const;
  /// Remove the first n digits.
  Seq drop(std::size_t n) const;
  /// Prepend a finite word.
  Seq prepend(const Bits& s) const;
  Seq complement() const;

  bool operator==(const Seq&) const = default;

  /// Text form "pre(per)", e.g. "10(01)"; constant tails "(0)", "(1)".
  std::string str() const;
  static Seq parse(const std::string& s);

 private:
  Bits pre_, per_;
};

bool tail_equivalent(const Seq& a, const Seq& b);

/// Deterministic test sequences. Preperiod length <= max_pre, period length
/// in [1, max_per].
Seq random_seq(std::mt19937_64& rng, std::size_t max_pre = 6,
               std::size_t max_per = 6);

/// An eventually constant sequence with prefix length <= max_pre.
Seq random_eventually_constant(std::mt19937_64& rng, std::size_t max_pre = 12);

}  // namespace ppg
