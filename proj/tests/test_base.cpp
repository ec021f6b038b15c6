#include <gtest/gtest.h>

#include "kac/base.hpp"
#include "oracles.hpp"

using namespace kac;

TEST(Rank, RejectsEmptyBlocks) {
  EXPECT_THROW(Rank(0, 1), Error);
  EXPECT_THROW(Rank(1, 0), Error);
  EXPECT_THROW(Rank(9, 8), Error);
  EXPECT_NO_THROW(Rank(8, 8));
}

TEST(Rank, ColorsRunFromMinusMPlusOneToNMinusOne) {
  Rank r(3, 2);
  EXPECT_EQ(r.colors(), (std::vector<int>{-2, -1, 0, 1}));
  EXPECT_EQ(r.even_colors(), (std::vector<int>{-2, -1}));
  EXPECT_EQ(r.odd_block_colors(), (std::vector<int>{1}));
  EXPECT_THROW(require_color(r, 2), Error);
  EXPECT_THROW(require_color(r, -3), Error);
}

TEST(Letter, OrderIsBarredDescendingThenUnbarred) {
  std::vector<Letter> seq = {Letter::barred(3), Letter::barred(2), Letter::barred(1), Letter::unbarred(1),
                             Letter::unbarred(2)};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) EXPECT_LT(seq[i], seq[i + 1]);
  EXPECT_LT(Letter::dual(1), Letter::dual(2));
  EXPECT_TRUE(Letter::unbarred(1).odd());
  EXPECT_FALSE(Letter::barred(1).odd());
  EXPECT_FALSE(Letter::dual(1).odd());
}

TEST(Letter, TextRoundTrip) {
  for (const char* s : {"b1", "b12", "3", "d2"}) EXPECT_EQ(to_string(parse_letter(s)), s);
  for (const char* s : {"", "b", "x1", "b0", "d1x", "123"}) EXPECT_THROW(parse_letter(s), Error) << s;
}

TEST(Weight, StorageOrderAndAccessors) {
  Weight w = parse_weight("4,3,2|3,1,0");
  EXPECT_EQ(w.m(), 3);
  EXPECT_EQ(w.n(), 3);
  EXPECT_EQ(w.bar(3), 4);
  EXPECT_EQ(w.bar(1), 2);
  EXPECT_EQ(w.unbar(1), 3);
  EXPECT_EQ(w.unbar(3), 0);
  EXPECT_EQ(to_string(w), "4,3,2|3,1,0");
}

TEST(Weight, ParseErrorsCarryPositions) {
  try {
    parse_weight("1,x|0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_weight("1,2"), Error);
  EXPECT_THROW(parse_weight("1|2|3"), Error);
  EXPECT_THROW(parse_weight("1,|2"), Error);
  try {
    parse_weight(Rank(2, 2), "1|0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(Weight, Dominance) {
  EXPECT_TRUE(parse_weight("4,3,2|3,1,0").is_dominant());
  EXPECT_TRUE(parse_weight("-1,-2|2,1").is_dominant());
  EXPECT_FALSE(parse_weight("1,2|0,0").is_dominant());
  EXPECT_FALSE(parse_weight("0,0|0,1").is_dominant());
  EXPECT_TRUE(parse_weight("4,3,2|2,0,0").is_polynomial_dominant());
  EXPECT_FALSE(parse_weight("1,0|1,0").is_polynomial_dominant());
  EXPECT_FALSE(parse_weight("0|-1").is_polynomial_dominant());
}

TEST(Weight, SimpleRootsAndForm) {
  Rank r(2, 2);
  EXPECT_EQ(to_string(simple_root(r, -1)), "1,-1|0,0");
  EXPECT_EQ(to_string(simple_root(r, 0)), "0,1|-1,0");
  EXPECT_EQ(to_string(simple_root(r, 1)), "0,0|1,-1");
  EXPECT_EQ(form(simple_root(r, 0), simple_root(r, 0)), 0);
  EXPECT_EQ(form(simple_root(r, -1), simple_root(r, -1)), 2);
  EXPECT_EQ(form(simple_root(r, 1), simple_root(r, 1)), -2);
}

TEST(Weight, TypicalityForGl11IsNonvanishingSum) {
  Rank r(1, 1);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) EXPECT_EQ(is_typical(r, Weight(r, {a, b})), a + b != 0) << a << "|" << b;
  EXPECT_THROW(is_typical(Rank(2, 1), parse_weight("0,1|0")), Error);
}

TEST(Partition, ConjugateAndContainment) {
  EXPECT_EQ(conjugate({4, 3, 2, 1, 1}), (Partition{5, 3, 2, 1}));
  EXPECT_EQ(conjugate({}), Partition{});
  EXPECT_EQ(trimmed({3, 0, 0}), Partition{3});
  EXPECT_TRUE(contains({3, 3, 2, 2}, {3, 1}));
  EXPECT_FALSE(contains({3, 3}, {1, 1, 1}));
  EXPECT_TRUE(is_hook(Rank(2, 2), {5, 4, 2, 2, 1}));
  EXPECT_FALSE(is_hook(Rank(2, 2), {3, 3, 3}));
}

TEST(Partition, HookBijectionOnWorkedShape) {
  Rank r(3, 3);
  EXPECT_EQ(to_string(hook_bijection(r, {4, 3, 2, 1, 1})), "4,3,2|2,0,0");
  EXPECT_EQ(hook_bijection_inv(r, parse_weight("4,3,2|2,0,0")), (Partition{4, 3, 2, 1, 1}));
  EXPECT_THROW(hook_bijection(r, {2, 2, 2, 4}), Error);
  EXPECT_THROW(hook_bijection(Rank(1, 1), {2, 2, 2}), Error);
}

TEST(Partition, HookBijectionRoundTripsOnSmallHooks) {
  Rank r(2, 2);
  int checked = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= std::min(b, 2); ++c)
        for (int d = 0; d <= c; ++d)
          for (int e = 0; e <= d; ++e) {
            Partition mu = trimmed({a, b, c, d, e});
            Weight w = hook_bijection(r, mu);
            EXPECT_TRUE(w.is_polynomial_dominant());
            EXPECT_EQ(hook_bijection_inv(r, w), mu);
            ++checked;
          }
  EXPECT_GT(checked, 30);
}

TEST(WeylDimension, AgreesWithTableauCount) {
  for (auto hw : std::vector<std::vector<int>>{{0}, {3}, {2, 1, 0}, {4, 3, 2}, {3, 1, 0}, {-1, -2}, {2, 2, -1}}) {
    EXPECT_EQ(static_cast<long long>(weyl_dimension(hw)), oracle::gl_dimension(hw));
  }
}
