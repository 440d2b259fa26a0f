#include <gtest/gtest.h>

#include <numeric>

#include "nsmm/minimal_models.hpp"

using namespace nsmm;

TEST(CentralCharge, Examples) {
  EXPECT_EQ(central_charge(7, 3), frac(-11, 14));
  EXPECT_EQ(central_charge(5, 3), frac(7, 10));
  EXPECT_THROW(central_charge(4, 3), InvalidModel);
  EXPECT_THROW(central_charge(3, 3), InvalidModel);
  EXPECT_THROW(central_charge(9, 3), InvalidModel);  // (9-3)/2 = 3 shares a factor with 3
  EXPECT_THROW(central_charge(1, 3), InvalidModel);
}

TEST(HighestWeight, Examples) {
  EXPECT_EQ(highest_weight(7, 3, 1, 1), 0);
  EXPECT_EQ(highest_weight(7, 3, 5, 1), frac(2, 7));
  EXPECT_EQ(highest_weight(7, 3, 3, 1), frac(-1, 14));
  EXPECT_THROW(highest_weight(7, 3, 2, 1), InvalidArgument);
  EXPECT_THROW(highest_weight(7, 3, 7, 1), InvalidArgument);
}

TEST(IrreducibleList, Examples) {
  auto l = irreducible_list(7, 3);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0].h, frac(-1, 14));
  EXPECT_EQ(l[1].h, 0);
  EXPECT_EQ(l[2].h, frac(2, 7));
  auto l53 = irreducible_list(5, 3);
  ASSERT_EQ(l53.size(), 2u);
  EXPECT_EQ(l53[0].h, 0);
  EXPECT_EQ(l53[1].h, frac(1, 10));
  EXPECT_THROW(irreducible_list(4, 3), InvalidModel);
}

TEST(IrreducibleList, SymmetryAndCount) {
  for (long p = 2; p <= 13; ++p)
    for (long q = 2; q <= 13; ++q) {
      if ((p - q) % 2 || std::gcd((p - q) / 2, q) != 1) continue;
      auto labels = all_labels(p, q);
      for (const auto& l : labels) EXPECT_EQ(l.h, highest_weight(p, q, p - l.m, q - l.n));
      EXPECT_EQ(highest_weight(p, q, 1, 1), 0);
      EXPECT_EQ(irreducible_list(p, q).size() * 2, labels.size()) << p << "," << q;
    }
}

TEST(SingularLevels, SevenThree) {
  EXPECT_EQ(singular_levels(label_for_weight(7, 3, frac(2, 7))), std::pair(Rational(2), frac(5, 2)));
  EXPECT_EQ(singular_levels(label_for_weight(7, 3, frac(-1, 14))), std::pair(frac(3, 2), Rational(4)));
  EXPECT_EQ(singular_levels(label_for_weight(7, 3, 0)), std::pair(frac(1, 2), Rational(6)));
  EXPECT_THROW(label_for_weight(7, 3, frac(1, 7)), UnknownWeight);
}
