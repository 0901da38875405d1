#include <gtest/gtest.h>

#include "lierep/errors.hpp"
#include "lierep/lie_type.hpp"
#include "lierep/weight.hpp"

using namespace lierep;

TEST(LieType, ParsesNames) {
  EXPECT_EQ(LieType::parse("C3"), LieType(Family::C, 3));
  EXPECT_EQ(LieType::parse("e8").name(), "E8");
  EXPECT_EQ(LieType::parse("G2").rank(), 2);
}

TEST(LieType, RejectsInvalidRanks) {
  EXPECT_THROW(LieType(Family::A, 0), InvalidArgument);
  EXPECT_THROW(LieType(Family::B, 1), InvalidArgument);
  EXPECT_THROW(LieType(Family::D, 3), InvalidArgument);
  EXPECT_THROW(LieType(Family::E, 5), InvalidArgument);
  EXPECT_THROW(LieType(Family::F, 3), InvalidArgument);
  EXPECT_THROW(LieType(Family::G, 3), InvalidArgument);
  EXPECT_THROW(LieType::parse("Q3"), InvalidArgument);
  EXPECT_THROW(LieType::parse("A"), InvalidArgument);
  EXPECT_THROW(LieType::parse("A2x"), InvalidArgument);
}

TEST(LieType, DiagnosticNamesTheConstraint) {
  try {
    LieType(Family::D, 3);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("D"), std::string::npos);
  }
}

TEST(Weight, ParseAndPrint) {
  EXPECT_EQ(Weight::parse("0,1,0"), (Weight{0, 1, 0}));
  EXPECT_EQ(Weight::parse("(2, -1)"), (Weight{2, -1}));
  EXPECT_EQ((Weight{0, 1, 0}).to_string(), "(0,1,0)");
  EXPECT_THROW(Weight::parse("1,,2"), InvalidArgument);
  EXPECT_THROW(Weight::parse("a,b"), InvalidArgument);
  EXPECT_THROW(Weight::parse(""), InvalidArgument);
}

TEST(Weight, Arithmetic) {
  const Weight a{1, 2, 0};
  const Weight b{0, 1, 1};
  EXPECT_EQ(a + b, (Weight{1, 3, 1}));
  EXPECT_EQ(a - b, (Weight{1, 1, -1}));
  EXPECT_EQ(3 * b, (Weight{0, 3, 3}));
  EXPECT_TRUE(a.is_dominant());
  EXPECT_FALSE((a - b).is_dominant());
  EXPECT_EQ(a.coordinate_sum(), 3);
  EXPECT_EQ(a.reversed(), (Weight{0, 2, 1}));
  EXPECT_EQ(Weight::fundamental(4, 2), (Weight{0, 0, 1, 0}));
  EXPECT_TRUE(Weight::zero(3).is_zero());
}
