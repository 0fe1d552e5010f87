#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "monochar/constructions.hpp"

using namespace monochar;

namespace {

// Oracle: closure by repeated products of Perm values, no Cayley table.
std::set<Perm> closure_oracle(const std::vector<Perm>& gens) {
  std::set<Perm> s{Perm::identity(gens.front().degree())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& g : gens)
        if (s.insert(a * g).second) grew = true;
  }
  return s;
}

// Oracle: conjugacy class count by direct conjugation of Perm values.
std::size_t class_count_oracle(const std::set<Perm>& g) {
  std::set<Perm> seen;
  std::size_t n = 0;
  for (const auto& x : g) {
    if (seen.contains(x)) continue;
    ++n;
    for (const auto& t : g) seen.insert(t * x * t.inverse());
  }
  return n;
}

// Oracle: subgroup generated by all commutators, straight from Perm values.
std::set<Perm> commutator_oracle(const std::set<Perm>& a, const std::set<Perm>& b) {
  std::vector<Perm> comms;
  for (const auto& x : a)
    for (const auto& y : b) comms.push_back(x * y * x.inverse() * y.inverse());
  return closure_oracle(comms);
}

std::set<Perm> as_set(const Subgroup& h) {
  std::set<Perm> s;
  for (auto m : h.members()) s.insert(h.parent()->element(m));
  return s;
}

}  // namespace

TEST(Perm, CyclesRoundTrip) {
  auto p = Perm::from_cycles(5, "(0 1 2)(3 4)");
  EXPECT_EQ(p[0], 1u);
  EXPECT_EQ(p[2], 0u);
  EXPECT_EQ(p.to_cycles(), "(0 1 2)(3 4)");
  EXPECT_EQ(Perm::identity(3).to_cycles(), "()");
  EXPECT_TRUE((p * p.inverse()).is_identity());
}

TEST(Perm, ProductAppliesLeftFactorFirst) {
  auto a = Perm::from_cycles(3, "(0 1)");
  auto b = Perm::from_cycles(3, "(1 2)");
  // 0 -a-> 1 -b-> 2
  EXPECT_EQ((a * b)[0], 2u);
}

TEST(Perm, RejectsBadInput) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0}), Error);
  EXPECT_THROW(Perm::from_cycles(3, "(0 3)"), Error);
  EXPECT_THROW(Perm::from_cycles(3, "(0 1 0)"), Error);
  EXPECT_THROW(Perm::from_cycles(3, "(0 1"), Error);
}

TEST(BuildGroup, CyclicOfOrderTwo) {
  auto g = build_group({Perm::from_cycles(2, "(0 1)")});
  EXPECT_EQ(g->order(), 2u);
  EXPECT_EQ(g->num_classes(), 2u);
}

TEST(BuildGroup, S3MatchesOracle) {
  std::vector<Perm> gens{Perm(std::vector<Point>{1, 2, 0}), Perm(std::vector<Point>{1, 0, 2})};
  auto g = build_group(gens);
  auto oracle = closure_oracle(gens);
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(g->order(), oracle.size());
  EXPECT_EQ(g->num_classes(), 3u);
  EXPECT_EQ(g->num_classes(), class_count_oracle(oracle));
}

TEST(BuildGroup, SL23HasOrder24AndSevenClasses) {
  auto g = sl2_3_group();
  EXPECT_EQ(g->order(), 24u);
  EXPECT_EQ(g->num_classes(), 7u);
  std::vector<Perm> gens;
  for (auto s : g->generators()) gens.push_back(g->element(s));
  EXPECT_EQ(class_count_oracle(closure_oracle(gens)), 7u);
}

TEST(BuildGroup, OrderCapIsEnforced) {
  BuildOptions opts;
  opts.order_cap = 100;
  EXPECT_THROW(symmetric_group(5, opts), Error);
  EXPECT_THROW(build_group({Perm::identity(2), Perm::identity(3)}), Error);
}

TEST(BuildGroup, IdsAreLexicographicAndTableMatchesPerms) {
  auto g = symmetric_group(4);
  for (ElementId i = 1; i < g->order(); ++i) EXPECT_LT(g->element(i - 1), g->element(i));
  EXPECT_TRUE(g->element(0).is_identity());
  for (ElementId a = 0; a < g->order(); a += 5)
    for (ElementId b = 0; b < g->order(); ++b) EXPECT_EQ(g->element(g->mul(a, b)), g->element(a) * g->element(b));
}

TEST(BuildGroup, ClassInvariants) {
  for (auto recipe : {"symmetric:4", "sl2_3", "dihedral:12", "extraspecial:3", "frobenius:7,3"}) {
    auto g = construct(recipe).group;
    std::size_t total = 0;
    for (ClassId c = 0; c < g->num_classes(); ++c) {
      EXPECT_EQ(g->order() % g->class_size(c), 0u) << recipe;
      total += g->class_size(c);
    }
    EXPECT_EQ(total, g->order()) << recipe;
    EXPECT_EQ(g->order() % g->exponent(), 0u) << recipe;
  }
}

TEST(Commutator, AbelianIsTrivial) {
  auto g = abelian_group({2, 6});
  EXPECT_TRUE(derived_subgroup(Subgroup::whole(g)).is_trivial());
}

TEST(Commutator, S3AndSL23MatchOracle) {
  auto s3 = symmetric_group(3);
  auto d = derived_subgroup(Subgroup::whole(s3));
  EXPECT_EQ(d.order(), 3u);
  EXPECT_EQ(as_set(d), commutator_oracle(as_set(Subgroup::whole(s3)), as_set(Subgroup::whole(s3))));

  auto sl = sl2_3_group();
  auto dsl = derived_subgroup(Subgroup::whole(sl));
  EXPECT_EQ(dsl.order(), 8u);
  EXPECT_EQ(as_set(dsl), commutator_oracle(as_set(Subgroup::whole(sl)), as_set(Subgroup::whole(sl))));
  EXPECT_TRUE(dsl.is_normal());
}

TEST(Commutator, MixedSubgroupsMatchOracle) {
  auto g = symmetric_group(4);
  auto a = Subgroup::generated_by(g, std::vector<ElementId>{g->class_rep(1)});
  auto b = Subgroup::whole(g);
  auto ab = commutator_subgroup(a, b);
  EXPECT_EQ(as_set(ab), commutator_oracle(as_set(a), as_set(b)));
}

TEST(DerivedSeries, SmallCases) {
  auto c6 = derived_series(cyclic_group(6));
  EXPECT_EQ(c6.terms.size(), 2u);
  EXPECT_EQ(c6.derived_length, 1u);
  auto s3 = derived_series(symmetric_group(3));
  ASSERT_EQ(s3.terms.size(), 3u);
  EXPECT_EQ(s3.terms[1].order(), 3u);
  EXPECT_EQ(s3.derived_length, 2u);
  auto a5 = derived_series(alternating_group(5));
  EXPECT_FALSE(a5.solvable);
  EXPECT_FALSE(a5.derived_length.has_value());
}

TEST(DerivedSeries, OrderThreeSeventyFiveHasLengthThree) {
  auto c = construct("heis_sd:5,3");
  EXPECT_EQ(c.group->order(), 375u);
  auto s = derived_series(c.group);
  EXPECT_EQ(s.derived_length, 3u);
}

TEST(Quotient, Basics) {
  auto g = sl2_3_group();
  auto whole = quotient_group(Subgroup::whole(g));
  EXPECT_EQ(whole.group->order(), 1u);

  auto s3 = symmetric_group(3);
  auto q = quotient_group(derived_subgroup(Subgroup::whole(s3)));
  EXPECT_EQ(q.group->order(), 2u);

  auto z = center(g);
  EXPECT_EQ(z.order(), 2u);
  auto a4 = quotient_group(z);
  EXPECT_EQ(a4.group->order(), 12u);
  EXPECT_EQ(a4.group->num_classes(), 4u);
  // Projection is a homomorphism onto the quotient.
  for (ElementId a = 0; a < g->order(); ++a)
    for (ElementId b = 0; b < g->order(); ++b)
      ASSERT_EQ(a4.project(g->mul(a, b)), a4.group->mul(a4.project(a), a4.project(b)));
}

TEST(Quotient, RejectsNonNormal) {
  auto s3 = symmetric_group(3);
  auto h = Subgroup::generated_by(s3, std::vector<ElementId>{s3->class_rep(1)});
  ASSERT_EQ(h.order(), 2u);
  EXPECT_THROW(quotient_group(h), Error);
}

TEST(Center, SmallCases) {
  EXPECT_TRUE(center(symmetric_group(3)).is_trivial());
  EXPECT_TRUE(center(abelian_group({2, 4})).is_whole());
  EXPECT_EQ(center(sl2_3_group()).order(), 2u);
}

TEST(Constructions, Orders) {
  EXPECT_EQ(quaternion_group()->order(), 8u);
  EXPECT_EQ(quaternion_group()->num_classes(), 5u);
  EXPECT_EQ(dihedral_group(8)->order(), 8u);
  EXPECT_EQ(dihedral_group(4)->order(), 4u);
  EXPECT_EQ(alternating_group(5)->order(), 60u);
  EXPECT_EQ(construct("extraspecial:5").group->order(), 125u);
  EXPECT_EQ(construct("frobenius:7,3").group->order(), 21u);
  EXPECT_EQ(construct("product:symmetric:4*cyclic:2").group->order(), 48u);
  EXPECT_EQ(construct("abelian:2,2,3").group->order(), 12u);
  EXPECT_THROW(construct("nosuch:3"), Error);
  EXPECT_THROW(construct("frobenius:7,4"), Error);
}

TEST(Constructions, ExtraspecialHasCenterEqualToDerived) {
  for (std::uint64_t p : {3u, 5u}) {
    auto g = extraspecial_group(p);
    auto z = center(g);
    auto d = derived_subgroup(Subgroup::whole(g));
    EXPECT_EQ(z.order(), p);
    EXPECT_EQ(z, d);
    for (ElementId x = 0; x < g->order(); ++x) EXPECT_EQ(p % g->element_order(x) == 0 || x == 0, true);
  }
}

TEST(Constructions, HeisenbergActionFixesCenter) {
  auto c = heisenberg_semidirect(5, 3);
  EXPECT_FALSE(c.note.empty());
  // The center of the order-375 group is the center of the normal 5^{1+2}.
  EXPECT_EQ(center(c.group).order(), 5u);
}

TEST(Constructions, GroupFile) {
  std::istringstream in("# S3\ndegree 3\n(0 1 2)\n(0 1)  # transposition\n");
  auto g = group_from_stream(in);
  EXPECT_EQ(g->order(), 6u);
  std::istringstream bad("(0 1)\n");
  EXPECT_THROW(group_from_stream(bad), Error);
}
