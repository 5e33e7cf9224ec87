#include "ppg/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace ppg {

LabeledTree LabeledTree::with_label(long l) const {
  LabeledTree t = *this;
  t.label_ = l;
  return t;
}

const LabeledTree& LabeledTree::at(const Bits& path) const {
  const LabeledTree* cur = this;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->is_leaf()) throw error("path leaves the tree");
    cur = path[i] ? &cur->right() : &cur->left();
  }
  return *cur;
}

LabeledTree LabeledTree::replace(const Bits& path, LabeledTree sub) const {
  if (path.empty()) return sub;
  if (is_leaf()) throw error("path leaves the tree");
  Bits rest = path.drop(1);
  if (path[0] == 0) return LabeledTree(label_, left().replace(rest, std::move(sub)), right());
  return LabeledTree(label_, left(), right().replace(rest, std::move(sub)));
}

std::size_t LabeledTree::leaf_count() const {
  if (is_leaf()) return 1;
  return left().leaf_count() + right().leaf_count();
}

namespace {

void collect_leaves(const LabeledTree& t, Bits& path, std::vector<Bits>& out) {
  if (t.is_leaf()) {
    out.push_back(path);
    return;
  }
  path.push_back(0);
  collect_leaves(t.left(), path, out);
  path.pop_back();
  path.push_back(1);
  collect_leaves(t.right(), path, out);
  path.pop_back();
}

}  // namespace

std::vector<Bits> LabeledTree::leaf_paths() const {
  std::vector<Bits> out;
  Bits path;
  collect_leaves(*this, path, out);
  return out;
}

PrefixSet LabeledTree::shape() const { return PrefixSet(leaf_paths()); }

bool LabeledTree::unlabeled() const {
  if (label_ != 0) return false;
  return is_leaf() || (left().unlabeled() && right().unlabeled());
}

BWord LabeledTree::leaf_string(std::size_t i) const {
  Bits path = leaf_paths().at(i);
  std::vector<BSym> syms;
  const LabeledTree* cur = this;
  auto emit_label = [&](long m) {
    for (long k = 0; k < labs(m); ++k) syms.push_back(m > 0 ? BSym::yp : BSym::yn);
  };
  emit_label(cur->label());
  for (std::size_t j = 0; j < path.size(); ++j) {
    syms.push_back(path[j] ? BSym::d1 : BSym::d0);
    cur = path[j] ? &cur->right() : &cur->left();
    emit_label(cur->label());
  }
  return BWord(std::move(syms));
}

LabeledTree LabeledTree::from_shape(const PrefixSet& shape,
                                    const std::map<Bits, long, BitsSetLess>& labels) {
  std::function<LabeledTree(const Bits&)> build = [&](const Bits& at) -> LabeledTree {
    auto it = labels.find(at);
    long label = it == labels.end() ? 0 : it->second;
    bool leaf = false;
    for (const Bits& m : shape.members())
      if (m == at) leaf = true;
    if (leaf) return LabeledTree::leaf(label);
    return LabeledTree(label, build(at.cat(Bits{0})), build(at.cat(Bits{1})));
  };
  LabeledTree t = build(Bits{});
  for (const auto& [path, l] : labels) t.at(path);  // validate paths exist
  return t;
}

LabeledTree LabeledTree::from_strings(const std::vector<BWord>& strings) {
  std::vector<Bits> skeleton;
  std::map<Bits, long, BitsSetLess> labels;
  for (const BWord& s : strings) {
    std::vector<uint8_t> digits;
    long run = 0;
    auto flush = [&](const Bits& at) {
      if (run == 0) return;
      auto [it, fresh] = labels.emplace(at, run);
      if (!fresh && it->second != run)
        throw error("inconsistent labels at vertex " + at.str());
      run = 0;
    };
    for (BSym sym : s.symbols()) {
      if (is_y(sym)) {
        run += sym == BSym::yp ? 1 : -1;
      } else {
        flush(Bits(digits));
        digits.push_back(sym == BSym::d1 ? 1 : 0);
      }
    }
    flush(Bits(digits));
    skeleton.push_back(Bits(std::move(digits)));
  }
  return from_shape(PrefixSet(std::move(skeleton)), labels);
}

std::vector<BWord> LabeledTree::strings() const {
  std::vector<BWord> out;
  for (std::size_t i = 0; i < leaf_count(); ++i) out.push_back(leaf_string(i));
  return out;
}

bool LabeledTree::operator==(const LabeledTree& o) const {
  if (label_ != o.label_ || is_leaf() != o.is_leaf()) return false;
  if (is_leaf()) return true;
  return left() == o.left() && right() == o.right();
}

LabeledTree vertex_move(const LabeledTree& t, const Bits& vertex, MoveDir dir) {
  const LabeledTree& p = t.at(vertex);
  if (p.is_leaf()) throw error("vertex move needs an internal vertex");
  if (dir == MoveDir::right) {
    const LabeledTree& q = p.left();
    if (q.is_leaf() || q.label() != 0)
      throw error("right move needs a zero-labeled caret below the left child");
    const LabeledTree &a = q.left(), &b = q.right(), &c = p.right();
    LabeledTree moved(p.label() - 1, a.with_label(a.label() + 1),
                      LabeledTree(0, b.with_label(b.label() - 1),
                                  c.with_label(c.label() + 1)));
    return t.replace(vertex, std::move(moved));
  }
  const LabeledTree& q = p.right();
  if (q.is_leaf() || q.label() != 0)
    throw error("left move needs a zero-labeled caret below the right child");
  const LabeledTree &a = p.left(), &b = q.left(), &c = q.right();
  LabeledTree moved(p.label() + 1,
                    LabeledTree(0, a.with_label(a.label() - 1), b.with_label(b.label() + 1)),
                    c.with_label(c.label() - 1));
  return t.replace(vertex, std::move(moved));
}

Diagram::Diagram(LabeledTree s, LabeledTree t) : source(std::move(s)), target(std::move(t)) {
  if (source.leaf_count() != target.leaf_count())
    throw error("diagram trees must have equal leaf counts");
}

Diagram insert_caret(const Diagram& d, std::size_t leaf_index) {
  if (leaf_index >= d.source.leaf_count()) throw error("leaf index out of range");
  auto split = [&](const LabeledTree& t) {
    Bits path = t.leaf_paths()[leaf_index];
    const LabeledTree& old = t.at(path);
    return t.replace(path, LabeledTree(old.label(), LabeledTree{}, LabeledTree{}));
  };
  return Diagram(split(d.source), split(d.target));
}

Diagram increment_labels(const Diagram& d, std::size_t leaf_index, int delta) {
  if (leaf_index >= d.source.leaf_count()) throw error("leaf index out of range");
  if (delta != 1 && delta != -1) throw error("delta must be +-1");
  auto bump = [&](const LabeledTree& t) {
    Bits path = t.leaf_paths()[leaf_index];
    const LabeledTree& old = t.at(path);
    return t.replace(path, old.with_label(old.label() + delta));
  };
  return Diagram(bump(d.source), bump(d.target));
}

namespace {

// Undo the source-leaf map lim(s_i .) on xi; nullopt when xi does not lie in
// this leaf's class.
std::optional<Seq> peel(const LabeledTree& source, const Bits& leaf_path, const Seq& xi) {
  Seq cur = xi;
  const LabeledTree* node = &source;
  auto unlabel = [&](long m) {
    for (long k = 0; k < labs(m); ++k) cur = apply_y(cur, m > 0 ? -1 : 1);
  };
  unlabel(node->label());
  for (std::size_t i = 0; i < leaf_path.size(); ++i) {
    if (cur.digit(0) != leaf_path[i]) return std::nullopt;
    cur = cur.drop(1);
    node = leaf_path[i] ? &node->right() : &node->left();
    unlabel(node->label());
  }
  return cur;
}

}  // namespace

Seq diagram_eval(const Diagram& d, const Seq& xi) {
  auto paths = d.source.leaf_paths();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto zeta = peel(d.source, paths[i], xi);
    if (!zeta) continue;
    return lim(d.target.leaf_string(i), *zeta);
  }
  throw error("no source leaf covers the sequence");
}

Diagram word_to_diagram(const StandardForm& form) {
  TreePair pair = word_to_pair(form.x_part());
  std::vector<Bits> need = pair.target.members();
  for (const Letter& l : form.y_part()) need.push_back(l.gen.sub);
  PrefixSet fine = minimal_cover(need);
  pair = refine_target(pair, fine);
  std::map<Bits, long, BitsSetLess> labels;
  for (const Letter& l : form.y_part()) labels[l.gen.sub] = l.exp;
  return Diagram(LabeledTree::from_shape(pair.source),
                 LabeledTree::from_shape(pair.target, labels));
}

namespace {

// y_p^{label(p)} over the labeled vertices, deepest first.
Word label_word(const LabeledTree& t) {
  std::vector<std::pair<Bits, long>> entries;
  std::function<void(const LabeledTree&, Bits&)> walk = [&](const LabeledTree& n, Bits& path) {
    if (n.label() != 0) entries.emplace_back(path, n.label());
    if (n.is_leaf()) return;
    path.push_back(0);
    walk(n.left(), path);
    path.pop_back();
    path.push_back(1);
    walk(n.right(), path);
    path.pop_back();
  };
  Bits path;
  walk(t, path);
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  std::vector<Letter> letters;
  for (auto& [p, m] : entries) letters.push_back(Letter{Gen{GenKind::Y, p}, m});
  return Word(std::move(letters));
}

}  // namespace

Word diagram_to_word(const Diagram& d) {
  Word ys = label_word(d.source);
  Word yt = label_word(d.target);
  Word xw = pair_to_word(TreePair(d.source.shape(), d.target.shape()));
  return (ys.inverse() * xw * yt).canonical();
}

Diagram compose_diagrams(const Diagram& d1, const Diagram& d2) {
  if (d1.target == d2.source) return Diagram(d1.source, d2.target);
  // try matching the middles by caret insertion
  std::vector<Bits> mids = d1.target.shape().members();
  for (const Bits& m : d2.source.shape().members()) mids.push_back(m);
  PrefixSet fine = minimal_cover(mids);
  auto refine = [&](Diagram d, auto side) {
    while (true) {
      auto leaves = side(d).leaf_paths();
      std::optional<std::size_t> split;
      for (std::size_t i = 0; i < leaves.size() && !split; ++i)
        for (const Bits& m : fine.members())
          if (prefix_relation(leaves[i], m) == PrefixRel::prefix) {
            split = i;
            break;
          }
      if (!split) return d;
      d = insert_caret(d, *split);
    }
  };
  Diagram a = refine(d1, [](const Diagram& d) -> const LabeledTree& { return d.target; });
  Diagram b = refine(d2, [](const Diagram& d) -> const LabeledTree& { return d.source; });
  if (a.target == b.source) return Diagram(a.source, b.target);
  // fall back to the word route
  Word w = diagram_to_word(d1) * diagram_to_word(d2);
  return word_to_diagram(to_standard_form(w));
}

Diagram reduce_f_diagram(const Diagram& d) {
  if (!d.source.unlabeled() || !d.target.unlabeled())
    throw error("reduction applies to unlabeled diagrams");
  TreePair p(d.source.shape(), d.target.shape());
  p = p.reduced();
  return Diagram(LabeledTree::from_shape(p.source), LabeledTree::from_shape(p.target));
}

namespace {

std::string label_mark(long m) {
  if (m == 1) return "•";   // filled dot
  if (m == -1) return "∘";  // ring
  return std::to_string(m);
}

std::string ascii_node(const LabeledTree& t) {
  if (t.is_leaf()) return t.label() == 0 ? "." : label_mark(t.label());
  std::string s = "(" + ascii_node(t.left()) + " " + ascii_node(t.right()) + ")";
  if (t.label() != 0) s += ":" + label_mark(t.label());
  return s;
}

void dot_nodes(const LabeledTree& t, const std::string& prefix, int& counter,
               std::string& out) {
  int id = counter++;
  out += "    " + prefix + std::to_string(id) + " [label=\"" +
         std::to_string(t.label()) + "\"];\n";
  if (t.is_leaf()) return;
  int l = counter;
  dot_nodes(t.left(), prefix, counter, out);
  int r = counter;
  dot_nodes(t.right(), prefix, counter, out);
  out += "    " + prefix + std::to_string(id) + " -> " + prefix + std::to_string(l) +
         " [label=\"0\"];\n";
  out += "    " + prefix + std::to_string(id) + " -> " + prefix + std::to_string(r) +
         " [label=\"1\"];\n";
}

}  // namespace

std::string render(const Diagram& d, RenderFormat format) {
  if (format == RenderFormat::ascii)
    return ascii_node(d.source) + " -> " + ascii_node(d.target) + "\n";
  std::string out = "digraph diagram {\n";
  int counter = 0;
  out += "  subgraph cluster_source {\n    label=\"source\";\n";
  dot_nodes(d.source, "s", counter, out);
  out += "  }\n";
  counter = 0;
  out += "  subgraph cluster_target {\n    label=\"target\";\n";
  dot_nodes(d.target, "t", counter, out);
  out += "  }\n}\n";
  return out;
}

}  // namespace ppg
