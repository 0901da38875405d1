#include <gtest/gtest.h>

#include "lierep/golden_tables.hpp"

using namespace lierep;

namespace {

std::vector<Weight> weights_of(const std::vector<Table1Entry>& entries) {
  std::vector<Weight> out;
  for (const auto& e : entries) out.push_back(e.weight);
  return out;
}

}  // namespace

TEST(GoldenTables, Version) { EXPECT_EQ(golden_tables_version(), 1); }

TEST(Table1, A2FamilyIsTruncatedByTheBound) {
  const auto entries = table1_entries(LieType::parse("A2"), 4);
  EXPECT_EQ(weights_of(entries), (std::vector<Weight>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}));
  const auto& e13 = entries[2];
  EXPECT_EQ(e13.n1, 12);
  EXPECT_EQ(e13.n2, 6);
  EXPECT_EQ(e13.dim, 24);
}

TEST(Table1, ParametricARows) {
  const auto a5 = table1_entries(LieType::parse("A5"), 4);
  EXPECT_EQ(weights_of(a5), (std::vector<Weight>{{0, 0, 0, 1, 1}, {0, 0, 0, 2, 0}, {0, 2, 0, 0, 0}, {1, 1, 0, 0, 0}}));
  for (const auto& e : a5) {
    if (e.weight == Weight{1, 1, 0, 0, 0}) {
      EXPECT_EQ(e.n1, 30);
      EXPECT_EQ(e.n2, 20);
      EXPECT_EQ(e.dim, 70);
      EXPECT_TRUE(e.annotations.empty());
    }
    if (e.weight == Weight{0, 2, 0, 0, 0}) {
      EXPECT_EQ(e.n2, 10);
      ASSERT_EQ(e.annotations.count("n2"), 1u);
      EXPECT_EQ(*e.annotations.at("n2").alternative, 15);
      EXPECT_TRUE(e.annotations.at("n2").known);
    }
  }
}

TEST(Table1, LongStandingAnnotations) {
  const auto g2 = table1_entries(LieType::parse("G2"), 4);
  ASSERT_EQ(g2.size(), 1u);
  EXPECT_EQ(g2[0].n1, 13);
  EXPECT_TRUE(g2[0].annotations.at("n1").known);
  EXPECT_EQ(*g2[0].annotations.at("n1").alternative, 12);
  // Exactly two kinds of long-standing annotations: A_n (020...0)-type n2 and G2 n1.
  for (const char* name : {"A2", "A3", "B2", "C2", "C3", "C4", "C5", "F4"}) {
    for (const auto& e : table1_entries(LieType::parse(name), 6))
      for (const auto& [field, a] : e.annotations) EXPECT_FALSE(a.known) << name << e.label << field;
  }
}

TEST(Table1, RecomputedDefectsInTheRankTwoRow) {
  const auto c2 = table1_entries(LieType::parse("C2"), 4);
  ASSERT_EQ(c2.size(), 5u);
  for (const auto& e : c2) {
    if (e.weight == Weight{2, 0}) {
      EXPECT_EQ(e.n2, 2);
      EXPECT_EQ(*e.annotations.at("n2").alternative, 1);
    }
  }
}

TEST(Table1, EmptyRowsAndNotes) {
  EXPECT_TRUE(table1_entries(LieType::parse("B3"), 6).empty());
  EXPECT_TRUE(table1_entries(LieType::parse("E6"), 6).empty());
  EXPECT_EQ(table1_notes(LieType::parse("C5")).size(), 1u);
  EXPECT_TRUE(table1_notes(LieType::parse("C4")).empty());
  EXPECT_TRUE(table1_entries(LieType::parse("C5"), 0).empty());
}

TEST(Table2, CharacteristicZeroRows) {
  auto weights = [](const char* name, int bound) {
    std::vector<Weight> out;
    for (const auto& e : table2_entries(LieType::parse(name), bound)) out.push_back(e.weight);
    return out;
  };
  EXPECT_EQ(weights("A1", 3), (std::vector<Weight>{{1}, {2}, {3}}));
  EXPECT_EQ(weights("A3", 2), (std::vector<Weight>{{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {1, 0, 0}, {2, 0, 0}}));
  EXPECT_EQ(weights("B3", 4), (std::vector<Weight>{{0, 0, 1}, {1, 0, 0}}));
  EXPECT_EQ(weights("B2", 4), (std::vector<Weight>{{0, 1}, {1, 0}}));
  EXPECT_EQ(weights("C2", 4), (std::vector<Weight>{{0, 1}, {1, 0}}));
  EXPECT_EQ(weights("C3", 4), (std::vector<Weight>{{0, 0, 1}, {1, 0, 0}}));
  EXPECT_EQ(weights("C4", 4), (std::vector<Weight>{{1, 0, 0, 0}}));
  EXPECT_EQ(weights("D5", 4), (std::vector<Weight>{{0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}}));
  EXPECT_EQ(weights("E7", 4), (std::vector<Weight>{{0, 0, 0, 0, 0, 0, 1}}));
  EXPECT_TRUE(weights("E8", 4).empty());
  // The F4 row holds only in characteristic 3.
  EXPECT_TRUE(weights("F4", 4).empty());
  EXPECT_EQ(weights("G2", 4), (std::vector<Weight>{{1, 0}}));
}
