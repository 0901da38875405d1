#include <gtest/gtest.h>

#include "lierep/errors.hpp"
#include "lierep/lemma_lab.hpp"
#include "lierep/weight_lattice.hpp"

using namespace lierep;

namespace {

RootVector rv(std::initializer_list<std::int64_t> c) { return RootVector(c); }

}  // namespace

TEST(HighestWeightMonotonicity, ReportsBothValues) {
  const RootSystem a2(LieType::parse("A2"));
  // omega = (2,2) > mu = (1,1) > nu = (0,0), omega >= mu coordinatewise.
  const auto r = check_highest_weight_monotonicity(a2, Weight{2, 2}, Weight{1, 1}, Weight{0, 0});
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.m_omega_nu, 3);
  EXPECT_EQ(r.m_mu_nu, 2);
  EXPECT_TRUE(r.holds);
}

TEST(HighestWeightMonotonicity, SkipsInapplicableTriples) {
  const RootSystem a2(LieType::parse("A2"));
  // (3,0) > (1,1) but not coordinatewise.
  const auto r = check_highest_weight_monotonicity(a2, Weight{3, 0}, Weight{1, 1}, Weight{0, 0});
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.skip_reason.empty());
  EXPECT_FALSE(check_highest_weight_monotonicity(a2, Weight{1, 1}, Weight{1, 1}, Weight{0, 0}).applicable);
}

TEST(DominanceMonotonicity, HoldsOnSmallTypes) {
  for (const char* name : {"A3", "B3", "C3", "G2"}) {
    const RootSystem rs(LieType::parse(name));
    for (const auto& lam : dominant_weights_up_to(rs.rank(), 3)) {
      const auto r = check_dominance_monotonicity(rs, lam);
      EXPECT_TRUE(r.holds()) << name << lam.to_string();
    }
  }
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_EQ(check_dominance_monotonicity(a2, Weight{2, 2}).pairs_checked, 9u);
}

TEST(SupportReduction, ShiftsByFundamentalWeights) {
  const RootSystem a3(LieType::parse("A3"));
  // mu = omega - alpha_1 - alpha_3.
  const Weight omega{2, 1, 2};
  const Weight mu{0, 3, 0};
  const auto c = root_coordinates(a3, omega, mu);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, rv({1, 0, 1}));
  const std::vector<int> J{1};
  const auto r = reduce_by_support(a3, omega, mu, J);
  EXPECT_EQ(r.omega_prime, (Weight{2, 0, 2}));
  EXPECT_EQ(r.mu_prime, (Weight{0, 2, 0}));
  EXPECT_EQ(r.m_original, 1);
  EXPECT_TRUE(r.equal());
}

TEST(SupportReduction, NonDominantShiftedWeight) {
  const RootSystem a2(LieType::parse("A2"));
  // (2,1) -> (0,2) = omega - alpha_1; J = {1} shifts by omega_1, so mu' = (-1,2).
  const std::vector<int> J{0};
  const auto r = reduce_by_support(a2, Weight{2, 1}, Weight{0, 2}, J);
  EXPECT_EQ(r.omega_prime, (Weight{1, 1}));
  EXPECT_EQ(r.mu_prime, (Weight{-1, 2}));
  EXPECT_EQ(r.m_reduced, 1);
  EXPECT_TRUE(r.equal());
  // Nothing moves when c_j = a_j.
  const std::vector<int> both{0, 1};
  const auto s = reduce_by_support(a2, Weight{2, 2}, Weight{0, 0}, both);
  EXPECT_EQ(s.omega_prime, (Weight{2, 2}));
  EXPECT_TRUE(s.equal());
}

TEST(SupportReduction, RejectsViolatedIndex) {
  const RootSystem a2(LieType::parse("A2"));
  // (3,0) -> (0,0) has c = (2,1) and a_2 = 0.
  const std::vector<int> J{1};
  EXPECT_THROW(reduce_by_support(a2, Weight{3, 0}, Weight{0, 0}, J), InvalidArgument);
  EXPECT_THROW(reduce_by_support(a2, Weight{1, 1}, Weight{3, 0}, J), InvalidArgument);
}

TEST(Subsystem, LeviTypesFollowTheDiagram) {
  const RootSystem c3(LieType::parse("C3"));
  const std::vector<int> tail{1, 2}, head{0, 1};
  EXPECT_EQ(SubsystemBase::from_simple_roots(c3, tail).induced_types(), std::vector<LieType>{LieType::parse("C2")});
  EXPECT_EQ(SubsystemBase::from_simple_roots(c3, head).induced_types(), std::vector<LieType>{LieType::parse("A2")});
  const RootSystem b3(LieType::parse("B3"));
  EXPECT_EQ(SubsystemBase::from_simple_roots(b3, tail).induced_types(), std::vector<LieType>{LieType::parse("B2")});
}

TEST(Subsystem, LongRootsOfBnFormDn) {
  for (int n = 4; n <= 6; ++n) {
    const RootSystem rs(LieType(Family::B, n));
    const auto bases = named_subsystem_bases(rs);
    ASSERT_EQ(bases.size(), 1u);
    EXPECT_EQ(bases[0].induced_types(), std::vector<LieType>{LieType(Family::D, n)});
  }
}

TEST(Subsystem, NamedBasesOfCn) {
  const RootSystem c5(LieType::parse("C5"));
  const auto bases = named_subsystem_bases(c5);
  ASSERT_EQ(bases.size(), 2u);
  EXPECT_EQ(bases[0].induced_types(), std::vector<LieType>{LieType::parse("C3")});
  EXPECT_EQ(bases[1].induced_types(), std::vector<LieType>{LieType::parse("C4")});
  // omega_5 restricts to the last fundamental weight of each.
  const auto r3 = subsystem_restrict(c5, Weight{0, 0, 0, 0, 1}, bases[0]);
  EXPECT_EQ(r3.components[0].weight, (Weight{0, 0, 1}));
  const auto r4 = subsystem_restrict(c5, Weight{0, 0, 0, 0, 1}, bases[1]);
  EXPECT_EQ(r4.components[0].weight, (Weight{0, 0, 0, 1}));
}

TEST(Subsystem, DnBaseIsD4) {
  const RootSystem d6(LieType::parse("D6"));
  const auto bases = named_subsystem_bases(d6);
  ASSERT_EQ(bases.size(), 1u);
  EXPECT_EQ(bases[0].induced_types(), std::vector<LieType>{LieType::parse("D4")});
}

TEST(Subsystem, RejectsInvalidBases) {
  const RootSystem d5(LieType::parse("D5"));
  // alpha_4 - alpha_5 is not a root.
  EXPECT_THROW(SubsystemBase::from_roots(d5, {rv({1, 0, 0, 0, 0}), rv({0, 1, 1, 0, 0}), rv({0, 0, 0, 1, -1}),
                                              rv({0, 0, 0, 1, 1})}),
               InvalidArgument);
  // alpha_4 + alpha_5 is not a root of D5 either.
  EXPECT_THROW(SubsystemBase::from_roots(d5, {rv({0, 0, 0, 1, 1})}), InvalidArgument);
  const RootSystem a2(LieType::parse("A2"));
  // alpha_1 and alpha_1 + alpha_2 pair positively.
  EXPECT_THROW(SubsystemBase::from_roots(a2, {rv({1, 0}), rv({1, 1})}), InvalidArgument);
  EXPECT_THROW(SubsystemBase::from_roots(a2, {rv({1, 0}), rv({1, 0})}), InvalidArgument);
  EXPECT_THROW(SubsystemBase::from_roots(a2, {}), InvalidArgument);
  const RootSystem g2(LieType::parse("G2"));
  // The long roots alpha_2 and 3 alpha_1 + alpha_2 span an A2.
  const auto base = SubsystemBase::from_roots(g2, {rv({0, 1}), rv({3, 1})});
  EXPECT_EQ(base.induced_types(), std::vector<LieType>{LieType::parse("A2")});
}

TEST(Subsystem, LeviRestriction) {
  const RootSystem c3(LieType::parse("C3"));
  const std::vector<int> s{1, 2};
  const auto r = levi_restriction(c3, Weight{1, 0, 1}, s);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].type, LieType::parse("C2"));
  EXPECT_EQ(r.components[0].nodes, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.components[0].weight, (Weight{0, 1}));
  const std::vector<int> all{0, 1, 2};
  EXPECT_THROW(levi_restriction(c3, Weight{1, 0, 1}, all), InvalidArgument);
}

TEST(LeviEquality, MatchesOnSupportedWeights) {
  const RootSystem a3(LieType::parse("A3"));
  const std::vector<int> s{0, 1};
  // (1,1,0) -> (0,0,1) = omega - alpha_1 - alpha_2; in A2 x: (1,1) -> (0,0): multiplicity 2.
  const auto r = check_levi_equality(a3, Weight{1, 1, 0}, s, Weight{0, 0, 1});
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.m_ambient, 2);
  EXPECT_TRUE(r.equal());
  // (0,1,0) -> (0,0,0) needs alpha_1 and alpha_3 too.
  EXPECT_FALSE(check_levi_equality(a3, Weight{0, 1, 0}, s, Weight{0, 0, 0}).applicable);
}

TEST(SubsystemBound, RestrictedMaximumDoesNotExceedAmbient) {
  MultiplicityCache cache;
  const RootSystem& c5 = cache.root_system(LieType::parse("C5"));
  for (const auto& base : named_subsystem_bases(c5)) {
    for (const auto& omega : dominant_weights_up_to(5, 2)) {
      EXPECT_TRUE(check_subsystem_bound(c5, omega, base, cache).holds()) << omega.to_string();
    }
  }
}

TEST(TypeALowerBound, UsesOuterSupport) {
  const RootSystem a5(LieType::parse("A5"));
  const auto r = check_type_a_lower_bound(a5, Weight{1, 0, 0, 1, 0});
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.j, 1);
  EXPECT_EQ(r.k, 4);
  EXPECT_EQ(r.bound, 3);
  EXPECT_GE(r.max_multiplicity, 3);
  EXPECT_FALSE(check_type_a_lower_bound(a5, Weight{0, 2, 0, 0, 0}).applicable);
  EXPECT_FALSE(check_type_a_lower_bound(RootSystem(LieType::parse("B2")), Weight{1, 1}).applicable);
}

TEST(LemmaSuite, SmallSweepPassesAndReportsCounts) {
  LemmaSuiteConfig config;
  config.monotonicity_max_rank = 2;
  config.monotonicity_max_sum = 3;
  config.reduction_max_rank = 2;
  config.reduction_max_sum = 3;
  config.levi_max_rank = 3;
  config.levi_max_sum = 2;
  config.type_a_max_rank = 3;
  config.type_a_max_sum = 3;
  const auto report = run_lemma_suite(config);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.lemmas.size(), 6u);
  for (const auto& s : report.lemmas) EXPECT_GT(s.cases, 0u) << s.name;
  const auto j = to_json(report);
  EXPECT_EQ(j["lemmas"].size(), 6u);
  EXPECT_EQ(j["config"]["levi_and_subsystem"]["max_sum"], 2);
  EXPECT_THROW(report.find("nonexistent"), InvalidArgument);
}
