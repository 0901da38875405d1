#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lierep/classification.hpp"
#include "lierep/errors.hpp"
#include "lierep/lemma_lab.hpp"

using namespace lierep;

namespace {

std::vector<Weight> prime2(const char* name, int bound) {
  return omega_search(RootSystem(LieType::parse(name)), 2, bound).prime(2);
}

}  // namespace

TEST(OmegaSearch, RankTwoSymplectic) {
  EXPECT_EQ(prime2("C2", 4), (std::vector<Weight>{{0, 2}, {0, 3}, {1, 1}, {2, 0}, {3, 0}}));
}

TEST(OmegaSearch, C3C4C5) {
  EXPECT_EQ(prime2("C3", 4), (std::vector<Weight>{{0, 1, 0}}));
  EXPECT_EQ(prime2("C4", 4), (std::vector<Weight>{{0, 0, 0, 1}, {0, 0, 1, 0}}));
  EXPECT_EQ(prime2("C5", 3), (std::vector<Weight>{{0, 0, 0, 0, 1}}));
}

TEST(OmegaSearch, A3) {
  EXPECT_EQ(prime2("A3", 4), (std::vector<Weight>{{0, 1, 1}, {0, 2, 0}, {0, 3, 0}, {1, 1, 0}}));
}

TEST(OmegaSearch, ExceptionalTier) {
  EXPECT_TRUE(prime2("E6", 2).empty());
  EXPECT_EQ(prime2("F4", 4), (std::vector<Weight>{{0, 0, 0, 1}}));
  EXPECT_EQ(prime2("G2", 4), (std::vector<Weight>{{0, 1}}));
}

TEST(OmegaSearch, RejectsUnsupportedArguments) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_THROW(omega_search(a2, 3, 4), InvalidArgument);
  EXPECT_THROW(omega_search(a2, 0, 4), InvalidArgument);
  EXPECT_THROW(omega_search(a2, 2, 0), InvalidArgument);
}

TEST(OmegaSearch, PrunedEqualsUnpruned) {
  for (const auto& t : types_up_to_rank(4)) {
    const RootSystem rs(t);
    for (int k = 1; k <= 2; ++k) {
      const auto pruned = omega_search(rs, k, 4, true);
      const auto full = omega_search(rs, k, 4, false);
      EXPECT_EQ(pruned.omega, full.omega) << t.name() << " k=" << k;
      EXPECT_LE(pruned.evaluated, full.evaluated);
      EXPECT_EQ(full.evaluated, full.candidates);
    }
  }
}

TEST(OmegaSearch, SetsAreNestedAndBounded) {
  for (const auto& t : types_up_to_rank(4)) {
    const auto r = omega_search(RootSystem(t), 2, 4);
    EXPECT_TRUE(std::includes(r.at(2).begin(), r.at(2).end(), r.at(1).begin(), r.at(1).end())) << t.name();
    for (const auto& w : r.at(2)) EXPECT_LE(w.coordinate_sum(), 4);
    const auto p = r.prime(2);
    std::vector<Weight> both;
    std::set_intersection(p.begin(), p.end(), r.at(1).begin(), r.at(1).end(), std::back_inserter(both));
    EXPECT_TRUE(both.empty());
  }
}

TEST(OmegaSearch, B2IsC2UnderSwap) {
  auto swapped = prime2("C2", 5);
  for (auto& w : swapped) w = w.reversed();
  std::sort(swapped.begin(), swapped.end());
  EXPECT_EQ(prime2("B2", 5), swapped);
}

TEST(OmegaSearch, TypeADualityClosure) {
  for (int n = 2; n <= 6; ++n) {
    const auto p = omega_search(RootSystem(LieType(Family::A, n)), 2, 4).prime(2);
    for (const auto& w : p) EXPECT_TRUE(std::binary_search(p.begin(), p.end(), w.reversed())) << n << w.to_string();
  }
}

TEST(VerifyTable1, DefaultTierHasOnlyAnnotatedDiffs) {
  const auto v = verify_table1(default_config());
  EXPECT_EQ(v.reports.size(), 19u);
  EXPECT_EQ(v.unannotated_diffs(), 0u);
  EXPECT_TRUE(v.passed());
  for (const auto& r : v.reports) {
    EXPECT_EQ(r.bound, 4);
    for (const auto& d : r.diffs) EXPECT_NE(d.field, "membership") << r.type.name() << d.entry;
  }
}

TEST(VerifyTable1, ReportsKnownDiffsAndTheC5Conflict) {
  const auto v = verify_table1(default_config());
  bool g2_flagged = false, a4_flagged = false, c5_noted = false;
  for (const auto& r : v.reports) {
    if (r.type == LieType::parse("G2")) {
      ASSERT_EQ(r.diffs.size(), 1u);
      EXPECT_EQ(r.diffs[0].field, "n1");
      EXPECT_EQ(r.diffs[0].table_value, 13);
      EXPECT_EQ(r.diffs[0].computed_value, 12);
      g2_flagged = r.diffs[0].annotated;
    }
    if (r.type == LieType::parse("A4")) {
      a4_flagged = std::any_of(r.diffs.begin(), r.diffs.end(), [](const TableDiff& d) {
        return d.weight == Weight{0, 2, 0, 0} && d.field == "n2" && d.computed_value == 5 && d.annotated;
      });
    }
    if (r.type == LieType::parse("C5")) {
      c5_noted = r.notes.size() == 1 && r.notes[0].find("(0,0,0,0,1)") != std::string::npos;
      EXPECT_EQ(r.omega2_prime, (std::vector<Weight>{{0, 0, 0, 0, 1}}));
    }
  }
  EXPECT_TRUE(g2_flagged);
  EXPECT_TRUE(a4_flagged);
  EXPECT_TRUE(c5_noted);
}

TEST(VerifyTable2, CharacteristicZero) {
  const auto v = verify_table2(default_config());
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(v.reports.front().type, LieType::parse("A1"));
  for (const auto& r : v.reports) {
    EXPECT_TRUE(r.missing.empty()) << r.type.name();
    if (r.type == LieType::parse("C3")) {
      EXPECT_TRUE(std::any_of(r.listed.begin(), r.listed.end(),
                              [](const auto& e) { return e.first.weight == Weight{0, 0, 1} && e.second == 1; }));
    }
  }
}

TEST(A2Family, ProfilesAndTripleMultiplicity) {
  const auto r = a2_family_check(5, 4);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.family.size(), 9u);  // (1,1) once, then (1,a) and (a,1)
  for (const auto& c : r.family) {
    if (c.weight == Weight{1, 2}) {
      EXPECT_EQ(c.computed.count(1), 9);
      EXPECT_EQ(c.computed.count(2), 3);
      EXPECT_EQ(c.computed.dim, 15);
    }
    if (c.weight == Weight{1, 1}) {
      EXPECT_EQ(c.computed.count(1), 6);
      EXPECT_EQ(c.computed.count(2), 1);
      EXPECT_EQ(c.computed.dim, 8);
    }
  }
  EXPECT_EQ(r.triples.size(), 9u);
  EXPECT_EQ(r.triples.front().weight, (Weight{2, 2}));
  EXPECT_EQ(r.triples.front().mu, (Weight{0, 0}));
  EXPECT_EQ(r.triples.front().multiplicity, 3);
  EXPECT_THROW(a2_family_check(2, 4), InvalidArgument);
}
