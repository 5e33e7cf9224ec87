#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "ppg/bits.hpp"

using namespace ppg;

namespace {

// Oracle: enumerate every prefix set with at most `max_leaves` leaves.
void all_prefix_sets(std::size_t max_leaves, std::vector<std::vector<Bits>>& out) {
  // generated by recursive splitting from the root
  std::function<std::vector<std::vector<Bits>>(const Bits&, std::size_t)> gen =
      [&](const Bits& at, std::size_t budget) {
        std::vector<std::vector<Bits>> res{{at}};
        if (budget < 2 || at.size() > 4) return res;
        auto ls = gen(at.cat(Bits{0}), budget - 1);
        for (const auto& l : ls) {
          if (l.size() >= budget) continue;
          auto rs = gen(at.cat(Bits{1}), budget - l.size());
          for (const auto& r : rs) {
            if (l.size() + r.size() > budget) continue;
            std::vector<Bits> both = l;
            both.insert(both.end(), r.begin(), r.end());
            res.push_back(std::move(both));
          }
        }
        return res;
      };
  out = gen(Bits{}, max_leaves);
}

}  // namespace

TEST_CASE("lexicographic order") {
  CHECK(lex_compare(Bits::parse("01"), Bits::parse("01")) == LexOrder::equal);
  // a proper extension precedes its initial part
  CHECK(lex_compare(Bits::parse("010"), Bits::parse("01")) == LexOrder::less_extension);
  CHECK(lex_less(Bits::parse("010"), Bits::parse("01")));
  CHECK(lex_compare(Bits::parse("00"), Bits::parse("01")) == LexOrder::less);
  CHECK(lex_compare(Bits::parse("01"), Bits::parse("010")) == LexOrder::greater_extension);
  CHECK(lex_compare(Bits::parse("1"), Bits::parse("011")) == LexOrder::greater);
}

TEST_CASE("exactly one relation holds per pair") {
  std::vector<Bits> words{Bits{}};
  for (int len = 1; len <= 4; ++len)
    for (int v = 0; v < (1 << len); ++v) {
      std::vector<uint8_t> d(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i) d[static_cast<std::size_t>(i)] = (v >> (len - 1 - i)) & 1;
      words.push_back(Bits(std::move(d)));
    }
  for (const Bits& s : words)
    for (const Bits& t : words) {
      int count = 0;
      auto rel = prefix_relation(s, t);
      count += rel == PrefixRel::equal;
      count += rel == PrefixRel::prefix;
      count += rel == PrefixRel::extension;
      count += rel == PrefixRel::incompatible;
      CHECK(count == 1);
      CHECK(is_incompatible(s, t) == is_incompatible(t, s));
      if (!(s == t)) {
        CHECK(lex_less(s, t) != lex_less(t, s));  // antisymmetric, total
      }
    }
}

TEST_CASE("incompatibility") {
  CHECK(is_incompatible(Bits{0}, Bits{1}));
  CHECK_FALSE(is_incompatible(Bits{0}, Bits{0, 1}));
  CHECK_FALSE(is_incompatible(Bits{}, Bits{1}));
}

TEST_CASE("prefix set validation") {
  CHECK_NOTHROW(PrefixSet({Bits{}}));
  CHECK_NOTHROW(PrefixSet({Bits{0}, Bits{1, 0}, Bits{1, 1}}));
  CHECK_THROWS_AS(PrefixSet({Bits{0}}), error);
  CHECK_THROWS_AS(PrefixSet({Bits{0}, Bits{1}, Bits{1, 1}}), error);
  CHECK_THROWS_AS(PrefixSet({Bits{}, Bits{0}}), error);
}

TEST_CASE("dominance") {
  PrefixSet root({Bits{}});
  PrefixSet split({Bits{0}, Bits{1}});
  PrefixSet deeper({Bits{0}, Bits{1, 0}, Bits{1, 1}});
  CHECK(dominates(root, root));
  CHECK(dominates(deeper, split));
  CHECK_FALSE(dominates(split, deeper));
  CHECK(dominates(deeper, root));
}

TEST_CASE("minimal cover examples") {
  CHECK(minimal_cover({Bits{}}) == PrefixSet({Bits{}}));
  CHECK(minimal_cover({Bits{0}, Bits{1}}) == PrefixSet({Bits{0}, Bits{1}}));
  // oracle for {00}: exhaustive search over prefix sets with <= 5 leaves
  std::vector<std::vector<Bits>> sets;
  all_prefix_sets(5, sets);
  std::optional<PrefixSet> best;
  for (const auto& members : sets) {
    PrefixSet cand(members);
    bool covers = false;
    for (const Bits& m : cand.members())
      if (is_prefix(Bits{0, 0}, m)) covers = true;
    if (!covers) continue;
    if (!best || dominates(*best, cand)) best = cand;
  }
  REQUIRE(best.has_value());
  CHECK(minimal_cover({Bits{0, 0}}) == *best);
  CHECK(*best == PrefixSet({Bits{0, 0}, Bits{0, 1}, Bits{1}}));
}

TEST_CASE("minimal cover is dominance-least among covers") {
  std::vector<std::vector<Bits>> sets;
  all_prefix_sets(6, sets);
  std::vector<std::vector<Bits>> inputs{
      {Bits{0, 0}}, {Bits{0, 1}, Bits{1, 1}}, {Bits{1, 0, 1}}, {Bits{}, Bits{0}}};
  for (const auto& a : inputs) {
    PrefixSet got = minimal_cover(a);
    for (const auto& members : sets) {
      PrefixSet cand(members);
      bool covers = true;
      for (const Bits& w : a) {
        bool one = false;
        for (const Bits& m : cand.members())
          if (is_prefix(w, m)) one = true;
        covers = covers && one;
      }
      if (covers) CHECK(dominates(cand, got));
    }
  }
}

TEST_CASE("parsing") {
  CHECK(Bits::parse("e") == Bits{});
  CHECK(Bits::parse("0110").str() == "0110");
  CHECK_THROWS_AS(Bits::parse("012"), parse_error);
}
