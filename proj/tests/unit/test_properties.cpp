#include <gtest/gtest.h>

#include "checks.hpp"
#include "corpus.hpp"
#include "gonlab/bounds.hpp"
#include "oracles.hpp"

using namespace gonlab;

namespace {

const std::vector<corpus::Sample>& small() {
  static const auto graphs = corpus::small_connected();
  return graphs;
}

std::string first(const checks::Result& r) { return r.ok() ? "" : r.violations.front(); }

}  // namespace

TEST(Corpus, ShapeAndConnectivity) {
  ASSERT_GE(small().size(), 200u);
  for (const auto& s : small()) {
    EXPECT_TRUE(s.graph.is_connected()) << s.label;
    EXPECT_LE(s.graph.vertex_count(), 10) << s.label;
  }
}

TEST(Properties, SoundnessSandwich) {
  const auto r = checks::soundness_sandwich(small());
  EXPECT_EQ(r.cases, small().size());
  EXPECT_TRUE(r.ok()) << r.violations.size() << " violations, first: " << first(r);
}

TEST(Properties, Reduction) {
  const auto r = checks::reduction_properties(small());
  EXPECT_TRUE(r.ok()) << r.violations.size() << " violations, first: " << first(r);
}

TEST(Properties, CheegerInequalities) {
  const auto r = checks::cheeger_inequalities(corpus::regular_up_to_16());
  EXPECT_GT(r.cases, 0u);
  EXPECT_TRUE(r.ok()) << first(r);
}

TEST(Properties, ProfilesAgainstOracles) {
  for (const auto& s : small()) {
    const auto& g = s.graph;
    if (g.vertex_count() < 2) continue;
    CheegerOptions all;
    all.enumeration = SubsetEnumeration::all;
    const auto fast = cheeger_profile(g);
    const auto slow = cheeger_profile(g, all);
    const auto sizes = oracle::separator_sizes(g);
    const auto seps = separator_profile(g);
    for (int j = 1; j <= fast.max_j(); ++j) {
      EXPECT_EQ(fast.at(j).h, slow.at(j).h) << s.label;
      EXPECT_EQ(fast.at(j).h, oracle::cheeger_u(g, j)) << s.label;
      if (j > 1) {
        EXPECT_LE(fast.at(j).h, fast.at(j - 1).h) << s.label;
      }
      const auto& cert = seps[static_cast<std::size_t>(j - 1)];
      ASSERT_EQ(cert.j, j);
      EXPECT_TRUE(cert.optimal);
      EXPECT_EQ(cert.size(), sizes[j]) << s.label << " j=" << j;
      for (const auto& c : components(g, cert.separator)) EXPECT_LE(static_cast<int>(c.size()), j);
    }
  }
}

TEST(Properties, RegularEdgeCountIdentity) {
  // On a k-regular graph, every U has 2 e(U) = k |U| - |dU|.
  for (const auto& s : corpus::regular_up_to_16(3, 10)) {
    const auto& g = s.graph;
    const int k = *g.regular_degree();
    const auto profile = cheeger_profile(g);
    for (const auto& row : profile.rows) {
      std::int64_t inside = 0;
      for (Vertex a : row.witness)
        for (Vertex b : row.witness)
          if (a < b) inside += g.multiplicity(a, b);
      EXPECT_EQ(2 * inside, k * static_cast<std::int64_t>(row.witness.size()) -
                                edge_boundary(g, row.witness));
    }
  }
}

TEST(Properties, CrossingStructureAndRouteOrder) {
  for (const auto& s : small()) {
    const auto& g = s.graph;
    if (g.vertex_count() < 4) continue;
    const auto r = full_report(g);
    // min{B_u, h u n} rises then falls.
    bool falling = false;
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
      const auto a = *r.rows[i - 1].separator_min;
      const auto b = *r.rows[i].separator_min;
      if (b < a) falling = true;
      if (falling) {
        EXPECT_LE(b, a) << s.label;
      }
    }
    if (r.cheeger && r.separator) {
      EXPECT_LE(r.cheeger->value, r.separator->value) << s.label;
    }
    for (const auto& row : r.rows) {
      if (row.separator_floor) {
        EXPECT_LE(*row.separator_floor, Rational(row.separator->size())) << s.label;
      }
    }
  }
}

TEST(Properties, BipartitionWindow) {
  int exercised = 0;
  for (const auto& s : small()) {
    const auto& g = s.graph;
    const int n = g.vertex_count();
    for (int j = 1; j <= n / 2; ++j) {
      const auto cert = min_separator(g, j);
      const auto comps = components(g, cert.separator);
      const int t = n - cert.size();
      int largest = 0;
      for (const auto& c : comps) largest = std::max(largest, static_cast<int>(c.size()));
      const bool feasible = t > 0 && 2 * largest < n && 3 * largest <= 2 * t;
      if (!feasible) {
        EXPECT_ANY_THROW(separator_bipartition(g, cert.separator)) << s.label;
        continue;
      }
      ++exercised;
      const auto b = separator_bipartition(g, cert.separator);
      EXPECT_EQ(static_cast<int>(b.a.size() + b.b.size()), t);
      EXPECT_GE(3 * static_cast<int>(b.a.size()), t) << s.label;
      EXPECT_LE(3 * static_cast<int>(b.a.size()), 2 * t) << s.label;
      for (Vertex x : b.a)
        for (Vertex y : b.b) EXPECT_EQ(g.multiplicity(x, y), 0);
    }
  }
  EXPECT_GT(exercised, 100);
}

TEST(Properties, SeparatorInequalityHoldsExhaustively) {
  // Every split V = A + B + S with no A-B edges must have |S| at least the
  // eigenvalue separator bound.
  int checked = 0;
  for (const auto& s : small()) {
    const auto& g = s.graph;
    const int n = g.vertex_count();
    if (n > 8) continue;
    const auto spec = algebraic_connectivity(g);
    int labels = 1;
    for (int i = 0; i < n; ++i) labels *= 3;
    std::vector<int> side(n);
    for (int code = 0; code < labels; ++code) {
      int a = 0, b = 0, x = code;
      for (int v = 0; v < n; ++v, x /= 3) {
        side[v] = x % 3;
        a += side[v] == 1;
        b += side[v] == 2;
      }
      if (a == 0 || b == 0) continue;
      bool cut = true;
      for (int v = 0; v < n && cut; ++v)
        for (int w = 0; w < n && cut; ++w)
          if (side[v] == 1 && side[w] == 2 && g.multiplicity(v, w) > 0) cut = false;
      if (!cut) continue;
      ++checked;
      const double bound = separator_lower_bound(a, b, spec.lambda2, spec.d_max, n);
      EXPECT_GE(n - a - b, bound - 1e-9) << s.label << " |A|=" << a << " |B|=" << b;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Properties, SpanningTreesAndGenus) {
  for (const auto& s : small()) {
    const auto& g = s.graph;
    EXPECT_GE(genus(g), 0);
    EXPECT_EQ(genus(g) == 0, oracle::spanning_trees(g) == 1) << s.label;
  }
}
