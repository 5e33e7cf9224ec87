#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse failure; carries the offset of the offending character.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t at)
      : error(what + " (at position " + std::to_string(at) + ")"), position(at) {}
  std::size_t position;
};

/// A finite binary word. Digits are stored as 0/1 bytes.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::vector<uint8_t> d) : digits_(std::move(d)) { check(); }
  Bits(std::initializer_list<int> d) {
    for (int b : d) digits_.push_back(static_cast<uint8_t>(b));
    check();
  }

  static Bits zeros(std::size_t n) { return Bits(std::vector<uint8_t>(n, 0)); }
  static Bits ones(std::size_t n) { return Bits(std::vector<uint8_t>(n, 1)); }

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  uint8_t operator[](std::size_t i) const { return digits_[i]; }
  uint8_t back() const { return digits_.back(); }

  void push_back(uint8_t b) { digits_.push_back(b & 1); }
  void pop_back() { digits_.pop_back(); }

  Bits cat(const Bits& t) const;
  Bits cat(uint8_t b) const;
  /// Initial part of length n.
  Bits restrict_to(std::size_t n) const;
  /// Drop the first n digits.
  Bits drop(std::size_t n) const;
  /// Flip every digit.
  Bits complement() const;
  /// All digits equal (true for the empty word).
  bool is_constant() const;

  bool operator==(const Bits&) const = default;

  const std::vector<uint8_t>& digits() const { return digits_; }

  std::string str() const;          // "e" for the empty word
  static Bits parse(const std::string& s);

 private:
  void check() const {
    for (uint8_t b : digits_)
      if (b > 1) throw error("binary digit out of range");
  }
  std::vector<uint8_t> digits_;
};

/// How two finite words sit relative to each other. Exactly one case holds.
enum class PrefixRel { equal, prefix, extension, incompatible };

/// PrefixRel::prefix means s is a proper initial part of t.
PrefixRel prefix_relation(const Bits& s, const Bits& t);

inline bool is_prefix(const Bits& s, const Bits& t) {  // s initial part of t
  auto r = prefix_relation(s, t);
  return r == PrefixRel::equal || r == PrefixRel::prefix;
}
bool is_incompatible(const Bits& s, const Bits& t);

/// Result of comparing two words in the lexicographic order of the group's
/// alphabet, where a proper extension precedes its prefix. The *_extension
/// variants flag that the order came from one word extending the other.
enum class LexOrder { less, equal, greater, less_extension, greater_extension };

LexOrder lex_compare(const Bits& s, const Bits& t);
bool lex_less(const Bits& s, const Bits& t);

/// std::set ordering helper; plain shortlex-style comparison, used only for
/// containers (not the group-theoretic order above).
struct BitsSetLess {
  bool operator()(const Bits& a, const Bits& b) const {
    return a.digits() < b.digits();
  }
};

/// A finite antichain of words covering every infinite sequence: the leaf set
/// of a finite full binary tree. Stored sorted left-to-right.
class PrefixSet {
 public:
  PrefixSet() : members_{Bits{}} {}
  explicit PrefixSet(std::vector<Bits> members);

  std::size_t size() const { return members_.size(); }
  const Bits& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Bits>& members() const { return members_; }

  /// Index of the unique member that is an initial part of any sequence
  /// starting with u, when u is long enough to decide; nullopt otherwise.
  std::optional<std::size_t> find_prefix_of(const Bits& u) const;

  bool operator==(const PrefixSet&) const = default;

 private:
  std::vector<Bits> members_;
};

/// True when every member of s has an extension in t.
bool dominates(const PrefixSet& t, const PrefixSet& s);

/// The dominance-least prefix set in which every element of a has an
/// extension.
PrefixSet minimal_cover(const std::vector<Bits>& a);

}  // namespace ppg
