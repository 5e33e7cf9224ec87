#pragma once

#include <optional>

#include "ppg/seq.hpp"

namespace ppg {

enum class GenKind { X, Y };

/// A localized generator: the primitive action (x or y) restricted to
/// sequences extending the subscript.
struct Gen {
  GenKind kind = GenKind::X;
  Bits sub;  // empty subscript = the global action

  bool operator==(const Gen&) const = default;
  std::string str() const;
};

struct Letter {
  Gen gen;
  long exp = 1;  // nonzero

  bool operator==(const Letter&) const = default;
};

/// A formal word over the localized generators. Letters are kept as given
/// (exponents nonzero); canonical() merges adjacent equal generators.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word one(Gen g, long exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  /// Sum of absolute exponents.
  std::size_t length() const;

  Word operator*(const Word& o) const;
  Word inverse() const;
  /// Merge adjacent equal generators, dropping cancellations.
  Word canonical() const;

  bool operator==(const Word&) const = default;

  std::string str() const;
  /// Terms are whitespace separated: x, y, x[bits], y[bits], optional ^n;
  /// aliases a = x, b = x[1], c = y[10].
  static Word parse(const std::string& text);

 private:
  std::vector<Letter> letters_;
};

/// xi.x^sign, the prefix rewrite 00->0, 01->10, 1->11 (or its inverse).
Seq apply_x(const Seq& xi, int sign);

/// xi.y^sign by running the two-state doubling transducer with cycle
/// detection; output is canonical.
Seq apply_y(const Seq& xi, int sign);

/// g^n applied to xi: strip the subscript, run the primitive action |n|
/// times, reattach. Sequences not extending the subscript are fixed.
Seq apply_generator(const Gen& g, long n, const Seq& xi);

/// Left-to-right evaluation of a word.
Seq evaluate(const Word& w, const Seq& xi);

/// The partial action of x_s^sign on finite words. Undefined (nullopt) when
/// the word is too short to determine its case.
std::optional<Bits> partial_apply_finite(const Bits& t, const Bits& s, int sign);
std::optional<Bits> partial_apply_finite(const Bits& t, const Gen& g, int sign);

/// Partial action of an X-word (fails on any Y letter).
std::optional<Bits> partial_apply_word(const Bits& t, const Word& w);

}  // namespace ppg
