#pragma once

#include "ppg/action.hpp"

namespace ppg {

/// Shortest word over {x, x[1]} (ties broken x < x^-1 < x[1] < x[1]^-1)
/// whose partial action carries <10> to s. Rejects constant s.
Word f_word(const Bits& s);

struct ConjugatingElement {
  Word g;  // an X-word over {x, x[1]}
  Bits s, t;
};

/// For incompatible u lex-less v: a g carrying some pair (s, t) with lengths
/// at most 3 onto (u, v).
ConjugatingElement conjugating_element(const Bits& u, const Bits& v);

enum class FiniteAlphabet { five, three };

/// Rewrite a word over the full generating set into one over
/// {x, x[1], y[0], y[1], y[10]} or {x, x[1], y[10]} with equal evaluation.
/// The three-letter alphabet rejects y-generators with constant subscripts.
Word expand_to_finite_generators(const Word& w, FiniteAlphabet alphabet);

struct RelationInstance {
  Word lhs, rhs;
};

/// All instances of relation family 1..5 with subscript lengths <= bound and
/// satisfiable side conditions.
std::vector<RelationInstance> relation_instances(int family, std::size_t bound);

enum class NineForm { xy, abc };

/// The finite presentation's nine relations, verbatim in either alphabet.
std::vector<RelationInstance> nine_relations(NineForm form);

}  // namespace ppg
