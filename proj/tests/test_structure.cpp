#include <gtest/gtest.h>

#include <numeric>

#include "monochar/constructions.hpp"
#include "monochar/structure.hpp"

using namespace monochar;

TEST(Fitting, Heights) {
  Workspace ws;
  EXPECT_EQ(fitting_height(ws, cyclic_group(12)), 1u);
  EXPECT_EQ(fitting_height(ws, quaternion_group()), 1u);
  EXPECT_EQ(fitting_height(ws, extraspecial_group(3)), 1u);
  EXPECT_EQ(fitting_height(ws, symmetric_group(3)), 2u);
  EXPECT_EQ(fitting_height(ws, symmetric_group(4)), 3u);
  EXPECT_EQ(fitting_height(ws, sl2_3_group()), 2u);
}

TEST(Fitting, Order375Group) {
  Workspace ws;
  auto g = ws.intern(heisenberg_semidirect(5, 3).group);
  auto series = fitting_series(ws, g);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[1].order(), 125u);
}

TEST(Fitting, RejectsNonsolvable) {
  Workspace ws;
  EXPECT_THROW(fitting_series(ws, alternating_group(5)), Error);
}

TEST(NormalComplement, Examples) {
  Workspace ws;
  auto c6 = normal_p_complement(ws, cyclic_group(6), 2);
  ASSERT_TRUE(c6.has_value());
  EXPECT_EQ(c6->order(), 3u);

  auto sl = ws.intern(sl2_3_group());
  auto q = normal_p_complement(ws, sl, 3);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->order(), 8u);
  EXPECT_FALSE(q->view()->is_abelian());
  EXPECT_FALSE(normal_p_complement(ws, sl, 2).has_value());
  EXPECT_TRUE(has_normal_sylow(ws, sl, 2));
  EXPECT_FALSE(has_normal_sylow(ws, sl, 3));
}

TEST(Profile, Invariants) {
  for (const char* recipe : {"cyclic:10", "dihedral:12", "symmetric:4", "sl2_3", "frobenius:7,3", "extraspecial:3",
                             "product:q8*cyclic:3", "alternating:5"}) {
    Workspace ws;
    auto g = ws.intern(construct(recipe).group);
    auto s = structure_profile(ws, g);
    if (s.solvable) {
      EXPECT_EQ(s.nilpotent, *s.fitting_height <= 1) << recipe;
      EXPECT_EQ(s.metabelian, *s.derived_length <= 2) << recipe;
    }
    for (auto p : s.primes)
      if (s.normal_sylow[p] && s.normal_p_complement[p]) {
        auto sy = sylow_subgroup(ws.lattice(g), p);
        auto co = *normal_p_complement(ws, g, p);
        EXPECT_EQ(sy.order() * co.order(), g->order());
        EXPECT_TRUE(intersection(sy, co).is_trivial());
      }
  }
}

TEST(Profile, Supersolvable) {
  Workspace ws;
  EXPECT_TRUE(is_supersolvable(ws, symmetric_group(3)));
  EXPECT_TRUE(is_supersolvable(ws, dihedral_group(8)));
  EXPECT_FALSE(is_supersolvable(ws, alternating_group(4)));
  EXPECT_FALSE(is_supersolvable(ws, sl2_3_group()));
}

TEST(PiSolvable, EmptySetAndA5) {
  Workspace ws;
  auto a5 = ws.intern(alternating_group(5));
  EXPECT_TRUE(is_pi_solvable(ws, a5, {}));
  EXPECT_FALSE(is_pi_solvable(ws, a5, {5}));
  EXPECT_TRUE(is_pi_solvable(ws, a5, {7}));
  EXPECT_TRUE(is_pi_solvable(ws, symmetric_group(4), {2, 3}));
}

TEST(HypothesisStar, Detection) {
  Workspace ws;
  EXPECT_FALSE(hypothesis_star(classify(ws, cyclic_group(5))).has_value());
  EXPECT_FALSE(hypothesis_star(classify(ws, symmetric_group(4))).has_value());
  auto sl = hypothesis_star(classify(ws, sl2_3_group()));
  ASSERT_TRUE(sl.has_value());
  EXPECT_EQ(*sl, std::make_pair(std::int64_t{3}, std::int64_t{2}));
  auto h = hypothesis_star(classify(ws, heisenberg_semidirect(5, 3).group));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, std::make_pair(std::int64_t{3}, std::int64_t{5}));
}

TEST(DegreeCounts, Order375Group) {
  Workspace ws;
  auto g = ws.intern(heisenberg_semidirect(5, 3).group);
  auto c = degree_counts(ws, g, 3, 5);
  EXPECT_EQ(c.order_P, 125u);
  EXPECT_EQ(c.order_P_derived, 5u);
  EXPECT_EQ(c.order_G_derived, 125u);
  EXPECT_EQ(c.n_P, 4);
  EXPECT_EQ(c.n_P_formula, 4);
  EXPECT_EQ(c.n_G, 12);
  EXPECT_EQ(c.m_G, 8);
  EXPECT_EQ(c.m_G_formula, 8);
  EXPECT_EQ(c.linear, 3);
  EXPECT_EQ(c.linear + c.n_G * 25 + c.m_G * 9, 375);
  EXPECT_TRUE(c.divides);
  EXPECT_EQ(std::gcd(375, 24), 3);
}
