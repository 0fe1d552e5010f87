#include <gtest/gtest.h>

#include "properties.hpp"

using namespace monochar;

namespace {

constexpr std::uint64_t kSeed = 7140;
constexpr std::size_t kInstances = 20;

std::vector<std::string> small_catalog() {
  CatalogOptions co;
  co.max_order = 40;
  std::vector<std::string> names;
  for (const auto& e : build_catalog(co))
    if (e.order <= 400) names.push_back(e.name);
  return names;
}

template <class Check>
void over_catalog(Check check) {
  for (const auto& name : small_catalog()) {
    Workspace ws;
    auto g = ws.intern(construct(name).group);
    auto r = check(ws, g);
    ASSERT_TRUE(r) << name << ": " << *r.failure;
  }
}

}  // namespace

TEST(Properties, Orthogonality) { over_catalog(props::orthogonality); }

TEST(Properties, WitnessIndex) { over_catalog(props::witness_index); }

TEST(Properties, NormalSubgroupsOfSuperMGroups) { over_catalog(props::normal_subgroups_monomial); }

TEST(Properties, SquarefreeDegreeBounds) { over_catalog(props::squarefree_bounds); }

TEST(Properties, FormulationAgreement) { over_catalog(props::formulation_agreement); }

TEST(Properties, FrobeniusReciprocity) {
  std::mt19937_64 rng(kSeed);
  auto r = props::frobenius_reciprocity(rng, kInstances);
  EXPECT_TRUE(r) << *r.failure;
  EXPECT_GE(r.instances, kInstances);
}

TEST(Properties, MackeySum) {
  std::mt19937_64 rng(kSeed + 1);
  auto r = props::mackey_sum(rng, kInstances);
  EXPECT_TRUE(r) << *r.failure;
  EXPECT_GE(r.instances, kInstances);
}

TEST(Properties, KernelIntersection) {
  std::mt19937_64 rng(kSeed + 2);
  auto r = props::kernel_intersection(rng, kInstances);
  EXPECT_TRUE(r) << *r.failure;
  EXPECT_GE(r.instances, kInstances);
}

TEST(Properties, LiftCommutesWithInduction) {
  std::mt19937_64 rng(kSeed + 3);
  auto r = props::lift_induce(rng, kInstances);
  EXPECT_TRUE(r) << *r.failure;
  EXPECT_GE(r.instances, kInstances);
}
