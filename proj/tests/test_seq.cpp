#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppg/seq.hpp"

using namespace ppg;

TEST_CASE("canonical form") {
  // the period is primitive
  Seq a(Bits{}, Bits::parse("0101"));
  CHECK(a.period() == Bits::parse("01"));
  // the preperiod is shortest: 1(10) denotes the same sequence as (11 0)? no:
  // 1 101010... = (11 0)? check digitwise instead
  Seq b(Bits::parse("1"), Bits::parse("10"));
  Seq c(Bits{}, Bits::parse("11"));  // 1111...
  CHECK_FALSE(b == c);
  // 0(10): 0 101010... equals (01) repeated
  Seq d(Bits::parse("0"), Bits::parse("10"));
  CHECK(d == Seq(Bits{}, Bits::parse("01")));
  CHECK(d.preperiod().empty());
}

TEST_CASE("canonicalization is idempotent and matches digitwise equality") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Seq s = random_seq(rng);
    Seq again(s.preperiod(), s.period());
    CHECK(again == s);
    Seq t = random_seq(rng);
    std::size_t horizon = 4 * (s.preperiod().size() + s.period().size() +
                               t.preperiod().size() + t.period().size() + 1);
    bool same = true;
    for (std::size_t k = 0; k < horizon; ++k)
      if (s.digit(k) != t.digit(k)) same = false;
    CHECK(same == (s == t));
  }
}

TEST_CASE("digit access and drop/prepend") {
  Seq s = Seq::parse("10(01)");
  CHECK(s.digit(0) == 1);
  CHECK(s.digit(1) == 0);
  CHECK(s.digit(2) == 0);
  CHECK(s.digit(3) == 1);
  CHECK(s.digit(4) == 0);
  CHECK(s.take(6) == Bits::parse("100101"));
  CHECK(s.drop(2) == Seq::parse("(01)"));
  CHECK(s.drop(3) == Seq::parse("(10)"));
  CHECK(s.drop(2).prepend(Bits::parse("10")) == s);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Seq x = random_seq(rng);
    CHECK(x.drop(3).prepend(x.take(3)) == x);
  }
}

TEST_CASE("tail equivalence") {
  CHECK(tail_equivalent(Seq::constant(0), Seq::constant(0)));
  CHECK_FALSE(tail_equivalent(Seq::constant(0), Seq::constant(1)));
  // oracle: compare suffixes digit by digit to depth 2*(|per|+|per|)
  Seq a = Seq::parse("1(10)");
  Seq b = Seq::parse("(01)");
  bool oracle = false;
  for (std::size_t i = 0; i <= 4 && !oracle; ++i)
    for (std::size_t j = 0; j <= 4 && !oracle; ++j) {
      bool same = true;
      for (std::size_t k = 0; k < 8; ++k)
        if (a.digit(i + k) != b.digit(j + k)) same = false;
      oracle = same;
    }
  CHECK(oracle);
  CHECK(tail_equivalent(a, b));
  CHECK_FALSE(tail_equivalent(Seq::parse("(011)"), Seq::parse("(01)")));
  CHECK(tail_equivalent(Seq::parse("111(001)"), Seq::parse("0(010)")));
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"(0)", "(1)", "10(01)", "1(10)", "(011)"}) {
    Seq s = Seq::parse(text);
    CHECK(Seq::parse(s.str()) == s);
  }
  CHECK(Seq::parse("10(01)").str() == "10(01)");
  CHECK_THROWS_AS(Seq::parse("10"), parse_error);
  CHECK_THROWS_AS(Seq::parse("10()"), parse_error);
  CHECK_THROWS_AS(Seq::parse("1(2)"), parse_error);
}
