#pragma once

#include "ppg/diagram.hpp"
#include "ppg/fgen.hpp"
#include "ppg/stdform.hpp"

namespace ppg {

/// The constructed evidence that a word is not in F: the word maps u xi to
/// v (xi.y^n) for every xi.
struct Witness {
  Bits u, v;
  std::size_t n = 0;
};

/// From a sufficiently expanded standard form with nonempty Y-part, build the
/// (u, v, n) witness. With require_pure_y the X-part must be empty; otherwise
/// it is absorbed through its inverse partial action.
Witness non_f_witness(const StandardForm& form, bool require_pure_y = false);

struct Verdict {
  bool is_identity = false;
  StandardForm reduced_form;
  std::optional<Witness> witness;
  std::optional<Trace> trace;
};

/// The full decision pipeline: standard form, sufficient expansion, then
/// either the non-F witness or tree-pair reduction of the X-word. The verdict
/// is cross-checked by evaluation on sample sequences; disagreement throws.
Verdict decide_identity(const Word& w, bool with_trace = false);

bool equal(const Word& w1, const Word& w2);

struct RelationReport {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
  std::string text;  // deterministic rendering
};

/// Run decide_identity plus pointwise sampling over every relation-family
/// instance with subscripts up to `bound`, and the nine relations in both
/// alphabets.
RelationReport verify_relations(std::size_t bound, std::size_t samples,
                                uint64_t seed);

/// Deterministic random words for property tests.
Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_sub = 4,
                 long max_exp = 2);

/// Validate a witness against the word it came from on `samples` random
/// sequences plus the discriminating periodic sequence.
bool validate_witness(const Word& w, const Witness& wit, std::size_t samples,
                      std::mt19937_64& rng);

}  // namespace ppg
