#include <gtest/gtest.h>

#include <random>

#include "gonlab/error.hpp"
#include "gonlab/reduction.hpp"
#include "oracles.hpp"

using namespace gonlab;

namespace {

Divisor make(const Multigraph& g, std::vector<Divisor::Chips> c) { return Divisor(g, std::move(c)); }

// v-reduced per the definition: effective away from v, and no nonempty set
// avoiding v can fire legally. Checked over all subsets.
bool reduced_by_definition(const Divisor& d, Vertex v) {
  const auto& g = d.graph();
  const int n = g.vertex_count();
  if (!d.is_effective_away_from(v)) return false;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (mask >> v & 1) continue;
    VertexSet s;
    for (Vertex w = 0; w < n; ++w)
      if (mask >> w & 1) s.push_back(w);
    if (fire_set(d, s).is_effective_away_from(v)) return false;
  }
  return true;
}

}  // namespace

TEST(Dhar, ZeroDivisorBurnsEverything) {
  const auto g = pappus_graph();
  for (Vertex v = 0; v < 18; ++v) EXPECT_TRUE(dhar_burn(Divisor(g), v).fully_burnt);
}

TEST(Dhar, PathExample) {
  const auto p = path_graph(3);
  const auto r = dhar_burn(make(p, {0, 2, 0}), 0);
  EXPECT_EQ(r.burnt, VertexSet{0});
  EXPECT_EQ(r.unburnt, (VertexSet{1, 2}));
  EXPECT_FALSE(r.fully_burnt);
}

TEST(Dhar, PappusFireStopsInsideInnerPair) {
  const auto g = pappus_graph();
  const auto d = Divisor::indicator(g, pappus_middle_ring());
  for (Vertex v : pappus_inner_ring()) {
    const auto r = dhar_burn(d - Divisor::point(g, v), v);
    ASSERT_EQ(r.burnt.size(), 2u);
    EXPECT_EQ(r.unburnt.size(), 16u);
    const Vertex partner = r.burnt[0] == v ? r.burnt[1] : r.burnt[0];
    EXPECT_EQ(g.multiplicity(v, partner), 1);
    EXPECT_GE(partner, 12);
  }
}

TEST(Dhar, RejectsDebtAwayFromSource) {
  const auto p = path_graph(3);
  EXPECT_THROW(dhar_burn(make(p, {0, -1, 0}), 0), PreconditionError);
}

TEST(Reduce, Examples) {
  const auto k2 = complete_graph(2);
  EXPECT_EQ(v_reduce(make(k2, {0, 1}), 0), make(k2, {1, 0}));
  const auto g = pappus_graph();
  const auto d = Divisor::indicator(g, pappus_middle_ring());
  for (Vertex v : pappus_inner_ring()) EXPECT_GE(v_reduce(d, v)[v], 1);
}

TEST(Reduce, MatchesDefinitionAndLattice) {
  const auto g = parse_edge_list("5 7\n0 1\n0 1\n1 2\n2 3\n3 4\n4 0\n1 3\n");
  const oracle::ClassKey classes(g);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> chip(-4, 4);
  for (int t = 0; t < 200; ++t) {
    std::vector<Divisor::Chips> c(5);
    for (auto& x : c) x = chip(rng);
    const auto d = make(g, c);
    const Vertex v = static_cast<Vertex>(rng() % 5);
    const auto r = v_reduce(d, v);
    EXPECT_TRUE(reduced_by_definition(r, v)) << d.to_string();
    EXPECT_TRUE(classes.equivalent(d, r)) << d.to_string();
    EXPECT_EQ(v_reduce(r, v), r);
  }
}

TEST(Reduce, DisconnectedIsRejected) {
  const std::vector<Edge> e{{0, 1}, {2, 3}};
  const auto g = Multigraph::from_edges(4, e);
  EXPECT_THROW(v_reduce(Divisor(g), 0), PreconditionError);
}

TEST(PositiveRank, Examples) {
  const auto k3 = complete_graph(3);
  EXPECT_FALSE(has_positive_rank(make(k3, {-1, 0, 0})));
  for (int n = 2; n <= 6; ++n) {
    const auto p = path_graph(n);
    for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(has_positive_rank(Divisor::point(p, v)));
  }
  const auto g = pappus_graph();
  EXPECT_TRUE(has_positive_rank(Divisor::indicator(g, pappus_middle_ring())));
  EXPECT_FALSE(has_positive_rank(Divisor::point(g, 0, 5)));
}

TEST(Rank, K3Example) {
  const auto k3 = complete_graph(3);
  const auto d = Divisor::point(k3, 0, 2);
  EXPECT_TRUE(rank_at_least(d, 1).holds);
  const auto q = rank_at_least(d, 2);
  EXPECT_FALSE(q.holds);
  ASSERT_TRUE(q.failing_subtrahend.has_value());
  EXPECT_EQ(q.failing_subtrahend->degree(), 2);
}

TEST(Rank, ZeroMeansEquivalentToEffective) {
  const auto c = cycle_graph(4);
  EXPECT_TRUE(rank_at_least(make(c, {2, -1, 0, 0}), 0).holds);
  EXPECT_FALSE(rank_at_least(make(c, {1, -1, 0, 0}), 0).holds);
}

TEST(Rank, BudgetCap) {
  const auto g = pappus_graph();
  RankOptions opts;
  opts.max_subtrahends = 10;
  EXPECT_THROW(rank_at_least(Divisor::indicator(g, pappus_middle_ring()), 1, opts), BudgetExceeded);
}

TEST(Enumerator, ColexOrderAndCount) {
  EffectiveDivisorEnumerator e(3, 2);
  std::vector<std::vector<Vertex>> seen;
  for (; !e.done(); e.advance()) seen.push_back(e.current());
  const std::vector<std::vector<Vertex>> expected{{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}};
  EXPECT_EQ(seen, expected);
  EXPECT_EQ(effective_divisor_count(3, 2), 6u);
  EXPECT_EQ(effective_divisor_count(18, 5), 26334u);
  EXPECT_EQ(effective_divisor_count(1000, 1000), UINT64_MAX);
}
