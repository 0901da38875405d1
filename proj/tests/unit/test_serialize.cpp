#include <gtest/gtest.h>

#include "lierep/errors.hpp"
#include "lierep/serialize.hpp"

using namespace lierep;
using nlohmann::json;

TEST(Serialize, IntegersSwitchToStringsBeyondInt64) {
  EXPECT_EQ(integer_to_json(Integer(42)), json(42));
  Integer big = 1;
  for (int i = 0; i < 30; ++i) big *= 1000;
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(integer_from_json(json(-7)), -7);
  EXPECT_THROW(integer_from_json(json("12x")), InvalidArgument);
  EXPECT_THROW(integer_from_json(json(1.5)), InvalidArgument);
}

TEST(Serialize, ProfileRoundTrip) {
  const RootSystem c4(LieType::parse("C4"));
  const auto p = weight_count_profile(c4, Weight{0, 0, 1, 0});
  const json j = to_json(p);
  EXPECT_EQ(j["n1"], 32);
  EXPECT_EQ(j["n2"], 8);
  EXPECT_EQ(j["dim"], 48);
  EXPECT_EQ(profile_from_json(j), p);
  EXPECT_EQ(to_json(profile_from_json(json::parse(j.dump()))).dump(), j.dump());
}

TEST(Serialize, WeightRoundTrip) {
  const Weight w{3, -1, 0};
  EXPECT_EQ(weight_from_json(to_json(w)), w);
  EXPECT_THROW(weight_from_json(json::parse("[1, \"a\"]")), InvalidArgument);
  EXPECT_THROW(weight_from_json(json(3)), InvalidArgument);
}

TEST(Serialize, TableSchema) {
  const RootSystem a2(LieType::parse("A2"));
  const auto j = to_json(a2, multiplicity_table(a2, Weight{1, 1}));
  EXPECT_EQ(j["highest"], json::parse("[1,1]"));
  EXPECT_EQ(j["entries"], json::parse("[[[0,0],2],[[1,1],1]]"));
  EXPECT_EQ(j["profile"]["dim"], 8);
}

TEST(Serialize, RootSystemSchema) {
  const auto j = to_json(RootSystem(LieType::parse("G2")));
  EXPECT_EQ(j["type"], "G2");
  EXPECT_EQ(j["cartan"], json::parse("[[2,-1],[-3,2]]"));
  EXPECT_EQ(j["positive_roots"].size(), 6u);
  EXPECT_EQ(j["root_lengths2"], json::parse("[\"2/3\",\"2\"]"));
  EXPECT_EQ(j["weyl_group_order"], 12);
}

TEST(Serialize, ClassificationReportSchema) {
  MultiplicityCache cache;
  const RootSystem& rs = cache.root_system(LieType::parse("G2"));
  const auto j = to_json(classify_type(rs, 3, true, cache));
  for (const char* key : {"type", "bound", "omega1", "omega2_prime", "profiles", "diffs"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["statement"], "verified within bound 3");
  ASSERT_EQ(j["diffs"].size(), 1u);
  for (const char* key : {"entry", "field", "table_value", "computed_value"}) EXPECT_TRUE(j["diffs"][0].contains(key));
  EXPECT_EQ(j["profiles"]["(0,1)"]["n1"], 12);
}
