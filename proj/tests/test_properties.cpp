#include <gtest/gtest.h>

#include "properties.hpp"

using namespace frob;

// The acceptance run uses its own seed; these draw different data.
constexpr std::uint64_t kSeed = 977;

TEST(Properties, ResidueGlobalSum) {
  PrecisionScope ps(256);
  auto o = props::residue_global_sum(kSeed);
  EXPECT_TRUE(o.pass) << o.str();
}

TEST(Properties, RootReconstruction) {
  PrecisionScope ps(256);
  auto o = props::root_reconstruction(kSeed);
  EXPECT_TRUE(o.pass) << o.str();
}

TEST(Properties, MixedPartials) {
  for (int n : {1, 2, 3}) {
    auto o = props::mixed_partials(n, kSeed);
    EXPECT_TRUE(o.pass) << o.str();
  }
}

TEST(Properties, CorrelatorSymmetry) {
  for (int n : {2, 3, 4}) {
    auto o = props::correlator_symmetry(n, kSeed);
    EXPECT_TRUE(o.pass) << o.str();
  }
}

TEST(Properties, JetDegreeTwo) {
  auto o = props::jet_degree_two(2, kSeed);
  EXPECT_TRUE(o.pass) << o.str();
  EXPECT_GT(o.cases, 100);
}

TEST(Properties, OutcomeKeepsFirstFailure) {
  props::Outcome o("x");
  o.require(true, "a");
  o.require(false, "b");
  o.require(false, "c");
  EXPECT_FALSE(o.pass);
  EXPECT_EQ(o.failure, "b");
  EXPECT_EQ(o.cases, 3);
}
