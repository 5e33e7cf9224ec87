#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppg/action.hpp"
#include "ppg/projmap.hpp"

using namespace ppg;

namespace {

ExtRat rat(long n, long d = 1) { return ExtRat(n, d); }

}  // namespace

TEST_CASE("extended rationals") {
  CHECK(ExtRat(2, 4) == ExtRat(1, 2));
  CHECK(ExtRat(-3, -6) == ExtRat(1, 2));
  CHECK(ExtRat(5, 0) == ExtRat::infinity());
  CHECK(ExtRat(1, 2) + ExtRat(1, 3) == ExtRat(5, 6));
  CHECK(ExtRat::infinity() + rat(1) == ExtRat::infinity());
  CHECK(ExtRat::infinity().reciprocal() == rat(0));
  CHECK(cyc_less(ExtRat::infinity(), rat(-100)));
  CHECK(cyc_less(rat(-1), rat(0)));
  CHECK(ExtRat::parse("-7/2") == ExtRat(-7, 2));
  CHECK(ExtRat::parse("inf").is_infinity());
}

TEST_CASE("projective matrices act and compose") {
  ProjMat shift(1, 1, 0, 1);  // t + 1
  CHECK(shift.apply(rat(1)) == rat(2));
  CHECK(shift.apply(ExtRat::infinity()) == ExtRat::infinity());
  ProjMat neg_inv(0, -1, 1, 0);  // -1/t
  CHECK(neg_inv.apply(rat(2)) == ExtRat(-1, 2));
  // scalar multiples compare equal
  CHECK(ProjMat(2, 0, 0, 2) == ProjMat::identity());
  CHECK(ProjMat(-1, 0, 0, -1) == ProjMat::identity());
  // right action order: t.(fg) = (t.f).g
  ProjMat dbl(2, 0, 0, 1);
  ExtRat t(3, 7);
  CHECK(shift.then(dbl).apply(t) == dbl.apply(shift.apply(t)));
  CHECK(shift.then(shift.inverse()) == ProjMat::identity());
}

TEST_CASE("phi on eventually constant sequences") {
  CHECK(phi_eval(Bits{}, 0) == ExtRat::infinity());
  CHECK(phi_eval(Bits{}, 1) == ExtRat::infinity());
  CHECK(phi_eval(Bits{1}, 0) == rat(0));
  CHECK(phi_eval(Bits{1, 1}, 0) == rat(1));
  // two-to-one identification at a sample prefix
  CHECK(phi_eval(Bits::parse("101"), 1) == phi_eval(Bits::parse("110"), 0));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Seq s = random_eventually_constant(rng, 10);
    Bits pre = s.preperiod();
    uint8_t tail = s.period()[0];
    CHECK(phi_eval(pre.cat(Bits{0}), 1) == phi_eval(pre.cat(Bits{1}), 0));
    CHECK(phi_eval(s) == phi_eval(pre, tail));
  }
}

TEST_CASE("phi interval") {
  auto [a0, a1] = phi_interval(Bits{1});
  CHECK(a0 == rat(0));
  CHECK(a1 == ExtRat::infinity());
  // endpoints via direct evaluation
  auto [b0, b1] = phi_interval(Bits::parse("10"));
  CHECK(b0 == phi_eval(Bits::parse("10"), 0));
  CHECK(b1 == phi_eval(Bits::parse("10"), 1));
  CHECK(b0 == rat(0));
  CHECK(b1 == rat(1));
  auto [c0, c1] = phi_interval(Bits{0});
  CHECK(c0 == ExtRat::infinity());
  CHECK(c1 == rat(0));
  CHECK_THROWS_AS(phi_interval(Bits{}), error);
}

TEST_CASE("builtin maps") {
  PiecewiseMap a = builtin_map(BuiltinMap::a);
  CHECK(a.piece_count() == 1);
  CHECK(a.pieces()[0] == ProjMat(1, 1, 0, 1));

  PiecewiseMap b = builtin_map(BuiltinMap::b);
  // value at the breakpoint agrees from both formulas: t/(1-t) and 3-1/t at 1/2
  CHECK(ProjMat(1, 0, -1, 1).apply(rat(1, 2)) == rat(1));
  CHECK(ProjMat(3, -1, 1, 0).apply(rat(1, 2)) == rat(1));
  CHECK(b.apply(rat(1, 2)) == rat(1));
  CHECK(b.apply(rat(-5)) == rat(-5));
  CHECK(b.apply(rat(1, 4)) == rat(1, 3));
  CHECK(b.apply(rat(2, 3)) == rat(3, 2));
  CHECK(b.apply(rat(2)) == rat(3));
  CHECK(b.apply(ExtRat::infinity()) == ExtRat::infinity());

  PiecewiseMap c = builtin_map(BuiltinMap::c);
  CHECK(c.apply(rat(1)) == rat(1));
  CHECK(c.apply(rat(1, 2)) == rat(2, 3));
  CHECK(c.apply(rat(7)) == rat(7));
}

TEST_CASE("compose and invert") {
  PiecewiseMap a = builtin_map(BuiltinMap::a);
  PiecewiseMap b = builtin_map(BuiltinMap::b);
  PiecewiseMap c = builtin_map(BuiltinMap::c);
  CHECK(compose(a, invert(a)).is_identity());
  CHECK(compose(b, invert(b)).is_identity());
  CHECK(compose(c, invert(c)).is_identity());
  CHECK(invert(a).pieces()[0] == ProjMat(1, -1, 0, 1));

  // inverse recovers inputs pointwise across the pieces of b
  for (long num = -10; num <= 10; ++num) {
    ExtRat t(num, 7);
    CHECK(invert(b).apply(b.apply(t)) == t);
  }

  // composition agrees pointwise with sequential application
  PiecewiseMap bc = compose(b, c);
  for (long num = -8; num <= 8; ++num) {
    ExtRat t(num, 5);
    CHECK(bc.apply(t) == c.apply(b.apply(t)));
  }
  CHECK(compose(bc, invert(c)).piece_count() == b.piece_count());
}

TEST_CASE("the three exact identities") {
  PiecewiseMap a = builtin_map(BuiltinMap::a);
  PiecewiseMap b = builtin_map(BuiltinMap::b);
  PiecewiseMap c = builtin_map(BuiltinMap::c);
  PiecewiseMap ai = invert(a), ci = invert(c);

  // b c a^-1 c^-1 a doubles on [0, 1]
  PiecewiseMap word = compose(compose(compose(compose(b, c), ai), ci), a);
  auto on01 = word.pieces_on(ExtRat(0), ExtRat(1));
  REQUIRE(!on01.empty());
  for (const auto& m : on01) CHECK(m == ProjMat(2, 0, 0, 1));

  // a b a is -1/t on [-1, -1/2]
  PiecewiseMap aba = compose(compose(a, b), a);
  for (const auto& m : aba.pieces_on(ExtRat(-1), ExtRat(-1, 2)))
    CHECK(m == ProjMat(0, -1, 1, 0));

  // b a^-3 is -1/t on [1/2, 1]
  PiecewiseMap ba3 = compose(compose(compose(b, ai), ai), ai);
  for (const auto& m : ba3.pieces_on(ExtRat(1, 2), ExtRat(1)))
    CHECK(m == ProjMat(0, -1, 1, 0));
}

TEST_CASE("piece table rendering") {
  PiecewiseMap dbl({ExtRat(0), ExtRat(1)},
                   {ProjMat(2, 0, 1, 1), ProjMat::identity()});
  std::string table = builtin_map(BuiltinMap::b).piece_table();
  CHECK(table.find("[inf, 0]: (t)/1") != std::string::npos);
  CHECK(table.find("[1/2, 1]: (3t-1)/t") != std::string::npos);
  CHECK(ProjMat(2, 0, 0, 1).str() == "(2t)/1");
}
