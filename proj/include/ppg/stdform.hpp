#pragma once

#include <map>
#include <optional>

#include "ppg/action.hpp"

namespace ppg {

/// Signals that a rewrite needed more depth than the form provides.
struct depth_error : error {
  using error::error;
};

enum class Rule { push_yx, expand_pos, expand_neg, swap_yy, split, merge, cancel };

const char* rule_name(Rule r);

struct DeriveStep {
  Rule rule;
  std::size_t at = 0;
  long arg = 0;  // split point for Rule::split, unused otherwise
};

/// Optional derivation log: one "rule=<id> at=<index> word=<rendered>" line
/// per applied substitution.
struct Trace {
  std::vector<std::string> lines;
};

/// One substitution applied to a word; side conditions are checked.
/// Rule::merge covers both exponent merging and cancellation deletion.
Word derive_step(const Word& w, const DeriveStep& step, Trace* trace = nullptr);

/// An X-word followed by a Y-word in which a subscript never precedes its
/// extensions and occurs at most once.
class StandardForm {
 public:
  StandardForm() = default;
  StandardForm(Word x_part, std::vector<Letter> y_part);

  const Word& x_part() const { return x_; }
  const std::vector<Letter>& y_part() const { return y_; }
  bool pure_x() const { return y_.empty(); }

  /// Length of the shortest y-subscript; nullopt for X-words.
  std::optional<std::size_t> depth() const;

  Word word() const;

  bool operator==(const StandardForm&) const = default;
  std::string str() const;  // X-part, then "|", then Y-part

 private:
  Word x_;
  std::vector<Letter> y_;
};

/// Derive from y_s^sign a standard form whose y-subscripts extend s, have
/// length at least l and exponent +-1, and are pairwise incompatible; the
/// x-subscripts extend s.
StandardForm expand_y_to_depth(const Bits& s, int sign, std::size_t l,
                               Trace* trace = nullptr);

/// Commute a trailing X-word through the Y-part. Throws depth_error when a
/// subscript image is undefined; callers deepen and retry.
StandardForm push_x_left(const StandardForm& form, const Word& xword,
                         Trace* trace = nullptr);

/// Derive a standard form of depth at least min_depth from an arbitrary word.
StandardForm to_standard_form(const Word& w, std::size_t min_depth = 0,
                              Trace* trace = nullptr);

/// Whether some extension of s meets no other subscript of the form except
/// initial parts of s.
bool is_exposed(const Bits& s, const StandardForm& form);

/// Termination measure for expansion: the covering tree size, then absolute
/// exponents read at the lex-greatest disagreeing subscript.
struct Measure {
  std::size_t tree_size = 0;
  std::map<Bits, unsigned long, BitsSetLess> exponents;

  bool operator==(const Measure&) const = default;
};

Measure measure_of(const StandardForm& form);
/// Strict well-founded order on measures.
bool measure_less(const Measure& a, const Measure& b);

bool is_sufficiently_expanded(const StandardForm& form);

/// Expand until every non-exposed positive y_s is accompanied by y_{s0} and
/// every non-exposed negative one by y_{s1}. Each step strictly decreases the
/// measure (asserted); the step measures are appended to *measures when given.
StandardForm sufficiently_expand(const StandardForm& form, Trace* trace = nullptr,
                                 std::vector<Measure>* measures = nullptr);

}  // namespace ppg
