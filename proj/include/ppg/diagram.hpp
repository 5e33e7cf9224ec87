#pragma once

#include <map>
#include <memory>

#include "ppg/bword.hpp"
#include "ppg/stdform.hpp"
#include "ppg/treepair.hpp"

namespace ppg {

/// A finite full binary tree with an integer label at every vertex. Values
/// are immutable; children are shared between copies.
class LabeledTree {
 public:
  LabeledTree() = default;  // single vertex, label 0
  LabeledTree(long label, LabeledTree left, LabeledTree right)
      : label_(label),
        kids_(std::make_shared<const std::pair<LabeledTree, LabeledTree>>(
            std::move(left), std::move(right))) {}
  static LabeledTree leaf(long label) {
    LabeledTree t;
    t.label_ = label;
    return t;
  }

  bool is_leaf() const { return kids_ == nullptr; }
  long label() const { return label_; }
  const LabeledTree& left() const { return kids_->first; }
  const LabeledTree& right() const { return kids_->second; }

  LabeledTree with_label(long l) const;
  /// Subtree at a path; throws when the path leaves the tree.
  const LabeledTree& at(const Bits& path) const;
  /// Functional update of the subtree at a path.
  LabeledTree replace(const Bits& path, LabeledTree sub) const;

  std::size_t leaf_count() const;
  std::vector<Bits> leaf_paths() const;
  PrefixSet shape() const;
  bool unlabeled() const;

  /// The string of the i-th leaf: path digits with y^label blocks after each
  /// labeled vertex.
  BWord leaf_string(std::size_t i) const;

  /// Build from a shape with labels at given vertex paths (others zero).
  static LabeledTree from_shape(const PrefixSet& shape,
                                const std::map<Bits, long, BitsSetLess>& labels = {});
  /// Build from the string set of one leaf word per line; validates that the
  /// digit skeleton forms a prefix set with consistent vertex labels.
  static LabeledTree from_strings(const std::vector<BWord>& strings);
  std::vector<BWord> strings() const;

  bool operator==(const LabeledTree& o) const;

 private:
  long label_ = 0;
  std::shared_ptr<const std::pair<LabeledTree, LabeledTree>> kids_;
};

enum class MoveDir { left, right };

/// The caret substitution at a vertex: direction right pushes one y of the
/// vertex label down across the caret below its left child; left is the
/// inverse. The required caret must carry label zero.
LabeledTree vertex_move(const LabeledTree& t, const Bits& vertex, MoveDir dir);

/// A pair of labeled trees with equal leaf counts.
struct Diagram {
  LabeledTree source, target;

  Diagram() = default;
  Diagram(LabeledTree s, LabeledTree t);

  bool operator==(const Diagram&) const = default;
  Diagram inverse() const { return Diagram(target, source); }
};

Diagram insert_caret(const Diagram& d, std::size_t leaf_index);
Diagram increment_labels(const Diagram& d, std::size_t leaf_index, int delta);

/// Evaluate the diagram's homeomorphism: peel the source leaf whose string
/// class covers xi, then take the limit of the matching target string.
Seq diagram_eval(const Diagram& d, const Seq& xi);

Diagram word_to_diagram(const StandardForm& form);
Word diagram_to_word(const Diagram& d);

/// Direct composition when the middle trees can be matched by caret
/// insertions; otherwise routed through words and standard forms.
Diagram compose_diagrams(const Diagram& d1, const Diagram& d2);

/// Reduce an unlabeled diagram to its unique reduced tree pair.
Diagram reduce_f_diagram(const Diagram& d);

enum class RenderFormat { ascii, dot };
std::string render(const Diagram& d, RenderFormat format);

}  // namespace ppg
