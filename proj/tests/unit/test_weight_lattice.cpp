#include <gtest/gtest.h>

#include "lierep/errors.hpp"
#include "lierep/lemma_lab.hpp"
#include "lierep/weight_lattice.hpp"
#include "oracles.hpp"

using namespace lierep;

TEST(Subdominant, MatchesBoxEnumeration) {
  for (const auto& t : types_up_to_rank(4)) {
    const RootSystem rs(t);
    for (const auto& lam : dominant_weights_up_to(rs.rank(), 4)) {
      EXPECT_EQ(subdominant_weights(rs, lam), oracle::subdominants_by_box(rs, lam)) << t.name() << lam.to_string();
    }
  }
  for (const char* name : {"D5", "C5", "B5", "E6"}) {
    const RootSystem rs(LieType::parse(name));
    for (const auto& lam : dominant_weights_up_to(rs.rank(), 2)) {
      EXPECT_EQ(subdominant_weights(rs, lam), oracle::subdominants_by_box(rs, lam)) << name << lam.to_string();
    }
  }
}

TEST(Subdominant, KnownExamples) {
  const RootSystem a3(LieType::parse("A3"));
  EXPECT_EQ(subdominant_weights(a3, Weight{0, 2, 0}), (std::vector<Weight>{{0, 0, 0}, {1, 0, 1}}));
  const RootSystem g2(LieType::parse("G2"));
  EXPECT_EQ(subdominant_weights(g2, Weight{0, 1}), (std::vector<Weight>{{0, 0}, {1, 0}}));
  EXPECT_TRUE(subdominant_weights(a3, Weight{1, 0, 0}).empty());
}

TEST(Dominance, Relation) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_TRUE(dominates(a2, Weight{1, 1}, Weight{0, 0}));
  EXPECT_TRUE(dominates(a2, Weight{1, 1}, Weight{1, 1}));
  EXPECT_FALSE(dominates(a2, Weight{1, 0}, Weight{0, 1}));
  EXPECT_FALSE(dominates(a2, Weight{0, 0}, Weight{1, 1}));
  const auto c = root_coordinates(a2, Weight{2, 2}, Weight{0, 0});
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (RootVector{2, 2}));
}

TEST(Reflections, DominantRepresentativeLiesInOrbit) {
  for (const char* name : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
    const RootSystem rs(LieType::parse(name));
    for (const auto& lam : dominant_weights_up_to(rs.rank(), 2)) {
      const auto orbit = oracle::weyl_orbit(rs.cartan(), lam);
      EXPECT_EQ(weyl_orbit_size(rs, lam), orbit.size()) << name << lam.to_string();
      for (const auto& w : orbit) EXPECT_EQ(dominant_representative(rs, w), lam) << name << w.to_string();
    }
  }
}

TEST(Reflections, SimpleReflectionIsInvolution) {
  const RootSystem f4(LieType::parse("F4"));
  const Weight w{1, -2, 3, 0};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(simple_reflection(f4, simple_reflection(f4, w, i), i), w);
    EXPECT_EQ(simple_reflection(f4, w, i)[i], -w[i]);
    EXPECT_EQ(f4.inner_product(simple_reflection(f4, w, i), simple_reflection(f4, w, i)), f4.inner_product(w, w));
  }
}

TEST(Enumeration, DominantWeightCount) {
  for (int rank = 1; rank <= 6; ++rank)
    for (int bound = 0; bound <= 5; ++bound) {
      const auto ws = dominant_weights_up_to(rank, bound);
      EXPECT_EQ(ws.size(), oracle::choose(bound + rank, rank));
      for (std::size_t i = 1; i < ws.size(); ++i) {
        const auto a = ws[i - 1].coordinate_sum(), b = ws[i].coordinate_sum();
        EXPECT_TRUE(a < b || (a == b && ws[i - 1] < ws[i]));
      }
    }
}

TEST(Validation, RequireDominant) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_THROW(require_dominant(a2, Weight{1, -1}, "w"), InvalidArgument);
  EXPECT_THROW(require_dominant(a2, Weight{1, 1, 1}, "w"), InvalidArgument);
  EXPECT_NO_THROW(require_dominant(a2, Weight{0, 3}, "w"));
  EXPECT_THROW(weyl_orbit_size(a2, Weight{1, -1}), InvalidArgument);
}
