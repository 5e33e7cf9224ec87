#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppg/bword.hpp"

using namespace ppg;

TEST_CASE("advancement rules") {
  CHECK(advance(BWord::parse("y00"), 0) == BWord::parse("0y"));
  CHECK(advance(BWord::parse("y01"), 0) == BWord::parse("10Y"));
  CHECK(advance(BWord::parse("y1"), 0) == BWord::parse("11y"));
  CHECK(advance(BWord::parse("Y0"), 0) == BWord::parse("00Y"));
  CHECK(advance(BWord::parse("Y10"), 0) == BWord::parse("01y"));
  CHECK(advance(BWord::parse("Y11"), 0) == BWord::parse("1Y"));
  // insufficient or missing digits
  CHECK_THROWS_AS(advance(BWord::parse("y0"), 0), error);
  CHECK_THROWS_AS(advance(BWord::parse("y"), 0), error);
  CHECK_THROWS_AS(advance(BWord::parse("Y1"), 0), error);
  CHECK_THROWS_AS(advance(BWord::parse("yy0"), 0), error);
  // the y count never changes
  CHECK(advance(BWord::parse("y01y"), 0).count_y() == 2);
}

TEST_CASE("potential cancellations") {
  CHECK(has_potential_cancellation(BWord::parse("yY"), 0));
  CHECK(has_potential_cancellation(BWord::parse("Yy"), 0));
  CHECK_FALSE(has_potential_cancellation(BWord::parse("y0y"), 0));
  // y01y advances to 10Yy
  CHECK(has_potential_cancellation(BWord::parse("y01y"), 0));
  CHECK_FALSE(has_potential_cancellation(BWord::parse("yy")));
  CHECK_FALSE(has_potential_cancellation(BWord::parse("y0yy")));
  // blocked before reaching the next occurrence: y0 cannot consume the Y
  CHECK_FALSE(has_potential_cancellation(BWord::parse("y0Y11")));
  CHECK(has_potential_cancellation(BWord::parse("y00Y")));
}

TEST_CASE("the involution commutes with advancement") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> sym(0, 3);
  for (int i = 0; i < 2000; ++i) {
    std::vector<BSym> syms;
    std::uniform_int_distribution<std::size_t> len(1, 9);
    std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) syms.push_back(static_cast<BSym>(sym(rng)));
    BWord w(std::move(syms));
    BWord m = w.mirrored();
    for (std::size_t k = 0; k < w.count_y(); ++k) {
      CHECK(can_advance(w, k) == can_advance(m, k));
      if (can_advance(w, k)) CHECK(advance(w, k).mirrored() == advance(m, k));
      CHECK(has_potential_cancellation(w, k) == has_potential_cancellation(m, k));
    }
  }
}

TEST_CASE("advancing preserves no-cancellation exhaustively") {
  // all words of length <= 10 would be 4^10; keep the unit run at <= 7 and
  // leave the full depth to the acceptance suite
  for (std::size_t len = 1; len <= 7; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      std::vector<BSym> syms(len);
      for (std::size_t i = 0; i < len; ++i) {
        syms[i] = static_cast<BSym>(c & 3);
        c >>= 2;
      }
      BWord w(std::move(syms));
      if (has_potential_cancellation(w)) continue;
      for (std::size_t k = 0; k < w.count_y(); ++k) {
        if (!can_advance(w, k)) continue;
        CHECK_FALSE(has_potential_cancellation(advance(w, k)));
      }
    }
  }
}

TEST_CASE("advance_all_no_cancel") {
  CHECK(advance_all_no_cancel(BWord::parse("01")) == BWord::parse("01"));
  // the worked chain: y0y1 => y011y => 10Y1y
  BWord w = BWord::parse("y0y1");
  BWord step1 = advance(w, 1);
  CHECK(step1 == BWord::parse("y011y"));
  BWord step2 = advance(step1, 0);
  CHECK(step2 == BWord::parse("10Y1y"));
  CHECK_FALSE(has_potential_cancellation(step2));
  CHECK_NOTHROW(advance_all_no_cancel(w));
  CHECK_THROWS_AS(advance_all_no_cancel(BWord::parse("yY")), error);
}

TEST_CASE("advance to a power of y") {
  // single occurrence, all four terminal shapes
  for (const char* text : {"y", "Y", "y0", "Y1", "0y00", "1Y10"}) {
    BWord w = BWord::parse(text);
    auto adv = advance_to_power(w);
    CHECK(adv.n == 1);
    // replay: w + appended advances to prefix + y^n
    std::vector<BSym> target;
    for (uint8_t b : adv.prefix.digits())
      target.push_back(b ? BSym::d1 : BSym::d0);
    for (std::size_t i = 0; i < adv.n; ++i) target.push_back(BSym::yp);
    CHECK(advances_to(w.append(adv.appended), BWord(std::move(target))));
  }
  // y^n 0^{2^n} advances to 0 y^n
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<BSym> syms(n, BSym::yp);
    syms.insert(syms.end(), static_cast<std::size_t>(1) << n, BSym::d0);
    std::vector<BSym> target{BSym::d0};
    target.insert(target.end(), n, BSym::yp);
    CHECK(advances_to(BWord(syms), BWord(target)));
  }
  // the inductive case y0y: u = 00 per the construction
  auto adv = advance_to_power(BWord::parse("y0y"));
  CHECK(adv.n == 2);
  CHECK(adv.appended == Bits::parse("00"));
  CHECK_THROWS_AS(advance_to_power(BWord::parse("yY")), error);
  CHECK_THROWS_AS(advance_to_power(BWord::parse("01")), error);
}

TEST_CASE("advancement preserves the limit semantics") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> sym(0, 3);
  int done = 0;
  while (done < 400) {
    std::vector<BSym> syms;
    std::uniform_int_distribution<std::size_t> len(1, 8);
    std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) syms.push_back(static_cast<BSym>(sym(rng)));
    BWord w(std::move(syms));
    bool any = false;
    for (std::size_t k = 0; k < w.count_y(); ++k)
      if (can_advance(w, k)) {
        Seq xi = random_seq(rng, 3, 3);
        CHECK(lim(w, xi) == lim(advance(w, k), xi));
        any = true;
      }
    if (any) ++done;
  }
}

TEST_CASE("lim folds digits and y-actions") {
  Seq xi = Seq::parse("(01)");
  CHECK(lim(BWord::parse("10"), xi) == xi.prepend(Bits::parse("10")));
  CHECK(lim(BWord::parse("y"), xi) == apply_y(xi, 1));
  CHECK(lim(BWord::parse("0y"), xi) == apply_y(xi, 1).prepend(Bits{0}));
  // y00 and 0y have the same limit
  CHECK(lim(BWord::parse("y00"), xi) == lim(BWord::parse("0y"), xi));
}
