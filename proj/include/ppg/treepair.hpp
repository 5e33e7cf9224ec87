#pragma once

#include "ppg/action.hpp"
#include "ppg/bits.hpp"

namespace ppg {

/// A tree diagram for Thompson's group F: two prefix sets of equal size,
/// matched leaf-by-leaf in left-to-right order. Maps source[i] xi to
/// target[i] xi.
struct TreePair {
  PrefixSet source;
  PrefixSet target;

  TreePair() = default;
  TreePair(PrefixSet s, PrefixSet t);

  bool operator==(const TreePair&) const = default;

  Seq apply(const Seq& xi) const;
  std::optional<Bits> apply_finite(const Bits& u) const;

  TreePair inverse() const { return TreePair(target, source); }
  TreePair then(const TreePair& g) const;

  /// Remove matching sibling carets until none remain; the result is the
  /// unique reduced pair for this element of F.
  TreePair reduced() const;
  bool is_trivial() const { return source.size() == 1 && source == target; }
};

/// The same element with its target refined to `fine`, which must dominate
/// the current target; the source picks up the matching subdivisions.
TreePair refine_target(const TreePair& p, const PrefixSet& fine);

/// The pair of x_s^sign.
TreePair generator_pair(const Bits& s, int sign);

/// The pair of an X-word.
TreePair word_to_pair(const Word& w);

/// A word (over localized x generators) whose evaluation is the pair's map.
Word pair_to_word(const TreePair& p);

}  // namespace ppg
