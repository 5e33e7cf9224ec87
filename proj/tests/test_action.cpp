#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ppg/action.hpp"
#include "ppg/projmap.hpp"

using namespace ppg;

TEST_CASE("word parsing and printing") {
  Word w = Word::parse("x[10]^-2 y b a^-1 c^3");
  REQUIRE(w.size() == 5);
  CHECK(w.letters()[0].gen == Gen{GenKind::X, Bits::parse("10")});
  CHECK(w.letters()[0].exp == -2);
  CHECK(w.letters()[1].gen == Gen{GenKind::Y, Bits{}});
  CHECK(w.letters()[2].gen == Gen{GenKind::X, Bits{1}});
  CHECK(w.letters()[3].gen == Gen{GenKind::X, Bits{}});
  CHECK(w.letters()[4].gen == Gen{GenKind::Y, Bits::parse("10")});
  CHECK(w.letters()[4].exp == 3);
  CHECK(Word::parse(w.str()) == w);
  CHECK(Word::parse("x x^-1").canonical().empty());
  CHECK_THROWS_AS(Word::parse("z"), parse_error);
  CHECK_THROWS_AS(Word::parse("x^0"), parse_error);
  CHECK_THROWS_AS(Word::parse("b[1]"), parse_error);
}

TEST_CASE("x action cases") {
  CHECK(apply_x(Seq::parse("00(1)"), 1) == Seq::parse("0(1)"));
  CHECK(apply_x(Seq::parse("01(1)"), 1) == Seq::parse("10(1)"));
  CHECK(apply_x(Seq::parse("1(0)"), 1) == Seq::parse("11(0)"));
  // the constant sequence is fixed
  CHECK(apply_x(Seq::constant(0), 1) == Seq::constant(0));
  CHECK(apply_x(Seq::constant(1), 1) == Seq::constant(1));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Seq xi = random_seq(rng);
    CHECK(apply_x(apply_x(xi, 1), -1) == xi);
    CHECK(apply_x(apply_x(xi, -1), 1) == xi);
  }
}

TEST_CASE("y action base cases") {
  CHECK(apply_y(Seq::constant(0), 1) == Seq::constant(0));
  CHECK(apply_y(Seq::constant(1), 1) == Seq::constant(1));
  // oracle through phi doubling: phi(01 0...) = 1/2 and phi(10 0...) = 1
  CHECK(phi_nonneg(Bits::parse("01"), 0) == ExtRat(1, 2));
  CHECK(phi_nonneg(Bits::parse("10"), 0) == ExtRat(1, 1));
  CHECK(apply_y(Seq::parse("01(0)"), 1) == Seq::parse("10(0)"));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    Seq xi = random_seq(rng);
    CHECK(apply_y(apply_y(xi, 1), -1) == xi);
    CHECK(apply_y(apply_y(xi, -1), 1) == xi);
  }
}

TEST_CASE("y transducer is a bijection on small sequences") {
  // exhaustive over |pre| + |per| <= 8
  std::vector<Seq> all;
  for (std::size_t pl = 0; pl <= 4; ++pl)
    for (std::size_t ql = 1; ql + pl <= 8; ++ql)
      for (std::size_t pv = 0; pv < (1u << pl); ++pv)
        for (std::size_t qv = 0; qv < (1u << ql); ++qv) {
          std::vector<uint8_t> pre(pl), per(ql);
          for (std::size_t i = 0; i < pl; ++i) pre[i] = (pv >> i) & 1;
          for (std::size_t i = 0; i < ql; ++i) per[i] = (qv >> i) & 1;
          all.emplace_back(Bits(std::move(pre)), Bits(std::move(per)));
        }
  std::sort(all.begin(), all.end(),
            [](const Seq& a, const Seq& b) { return a.str() < b.str(); });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const Seq& xi : all) {
    CHECK(apply_y(apply_y(xi, 1), -1) == xi);
    CHECK(apply_y(apply_y(xi, -1), 1) == xi);
  }
}

TEST_CASE("doubling identity: phi(xi.y) = 2 phi(xi)") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    Seq xi = random_eventually_constant(rng);
    Seq img = apply_y(xi, 1);
    ExtRat lhs = phi_nonneg(img.preperiod(), img.period()[0]);
    ExtRat rhs = ExtRat(2) * phi_nonneg(xi.preperiod(), xi.period()[0]);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("localized generators") {
  Gen y10{GenKind::Y, Bits::parse("10")};
  CHECK(apply_generator(y10, 1, Seq::parse("11(0)")) == Seq::parse("11(0)"));
  CHECK(apply_generator(y10, 1, Seq::parse("1001(0)")) == Seq::parse("1010(0)"));
  Gen x1{GenKind::X, Bits{1}};
  CHECK(apply_generator(x1, 1, Seq::parse("100(1)")) == Seq::parse("10(1)"));
}

TEST_CASE("word evaluation") {
  std::mt19937_64 rng(10);
  CHECK(evaluate(Word{}, Seq::parse("01(0)")) == Seq::parse("01(0)"));
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::uniform_int_distribution<int> kind(0, 1), bit(0, 1), ex(1, 2);
    std::vector<Letter> ls;
    std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<uint8_t> d(len(rng) % 4);
      for (auto& b : d) b = static_cast<uint8_t>(bit(rng));
      ls.push_back(Letter{Gen{kind(rng) ? GenKind::X : GenKind::Y, Bits(std::move(d))},
                          ex(rng) * (bit(rng) ? 1 : -1)});
    }
    Word w(std::move(ls));
    Seq xi = random_seq(rng);
    CHECK(evaluate(w * w.inverse(), xi) == xi);
  }
}

TEST_CASE("phi equivariance for the three generator pairs") {
  PiecewiseMap ma = builtin_map(BuiltinMap::a);
  PiecewiseMap mb = builtin_map(BuiltinMap::b);
  PiecewiseMap mc = builtin_map(BuiltinMap::c);
  Gen gx{GenKind::X, Bits{}}, gb{GenKind::X, Bits{1}}, gc{GenKind::Y, Bits::parse("10")};
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    Seq xi = random_eventually_constant(rng);
    CHECK(ma.apply(phi_eval(xi)) == phi_eval(apply_generator(gx, 1, xi)));
    CHECK(mb.apply(phi_eval(xi)) == phi_eval(apply_generator(gb, 1, xi)));
    CHECK(mc.apply(phi_eval(xi)) == phi_eval(apply_generator(gc, 1, xi)));
  }
}

TEST_CASE("partial action on finite words") {
  CHECK(partial_apply_finite(Bits::parse("00"), Bits{}, 1) == Bits::parse("0"));
  CHECK_FALSE(partial_apply_finite(Bits::parse("0"), Bits{}, 1).has_value());
  CHECK_FALSE(partial_apply_finite(Bits{}, Bits{}, 1).has_value());
  // localized: strip 10, rewrite, reattach
  auto got = partial_apply_finite(Bits::parse("1011"), Bits::parse("10"), 1);
  REQUIRE(got.has_value());
  CHECK(*got == Bits::parse("10111"));
  // oracle: every infinite extension maps to an extension of the image
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Seq tail = random_seq(rng, 3, 3);
    Seq in = tail.prepend(Bits::parse("1011"));
    Seq out = apply_generator(Gen{GenKind::X, Bits::parse("10")}, 1, in);
    CHECK(out.starts_with(Bits::parse("10111")));
    CHECK(out == tail.prepend(Bits::parse("10111")));
  }
  // incompatible subscript acts as the identity on the word
  CHECK(partial_apply_finite(Bits::parse("01"), Bits::parse("11"), 1) == Bits::parse("01"));
  // inverse direction cases
  CHECK(partial_apply_finite(Bits::parse("0"), Bits{}, -1) == Bits::parse("00"));
  CHECK(partial_apply_finite(Bits::parse("10"), Bits{}, -1) == Bits::parse("01"));
  CHECK(partial_apply_finite(Bits::parse("11"), Bits{}, -1) == Bits::parse("1"));
  CHECK_FALSE(partial_apply_finite(Bits::parse("1"), Bits{}, -1).has_value());
}

TEST_CASE("partial action consistent with the sequence action") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::size_t> len(0, 5);
  std::uniform_int_distribution<int> bit(0, 1), sgn(0, 1);
  for (int i = 0; i < 500; ++i) {
    std::vector<uint8_t> td(len(rng)), sd(len(rng) % 3);
    for (auto& b : td) b = static_cast<uint8_t>(bit(rng));
    for (auto& b : sd) b = static_cast<uint8_t>(bit(rng));
    Bits t(std::move(td)), s(std::move(sd));
    int sign = sgn(rng) ? 1 : -1;
    auto img = partial_apply_finite(t, s, sign);
    if (!img) continue;
    Seq tail = random_seq(rng, 2, 3);
    Seq out = apply_generator(Gen{GenKind::X, s}, sign, tail.prepend(t));
    CHECK(out == tail.prepend(*img));
  }
}

TEST_CASE("incompatible localizations commute pointwise") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  std::uniform_int_distribution<int> bit(0, 1);
  int done = 0;
  while (done < 200) {
    std::vector<uint8_t> sd(len(rng)), td(len(rng));
    for (auto& b : sd) b = static_cast<uint8_t>(bit(rng));
    for (auto& b : td) b = static_cast<uint8_t>(bit(rng));
    Bits s(std::move(sd)), t(std::move(td));
    if (!is_incompatible(s, t)) continue;
    ++done;
    Gen ys{GenKind::Y, s}, yt{GenKind::Y, t};
    Seq xi = random_seq(rng);
    CHECK(apply_generator(yt, 1, apply_generator(ys, 1, xi)) ==
          apply_generator(ys, 1, apply_generator(yt, 1, xi)));
  }
}
