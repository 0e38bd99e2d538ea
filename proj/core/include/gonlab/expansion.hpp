#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gonlab/budget.hpp"
#include "gonlab/graph.hpp"
#include "gonlab/rational.hpp"

namespace gonlab {

// Number of edges (with multiplicity) with exactly one endpoint in s.
std::int64_t edge_boundary(const Multigraph& g, std::span<const Vertex> s);

// u = j/n. h_u and B_u only change at multiples of 1/n, so j indexes the grid.
struct CheegerRow {
  int j = 0;
  Rational h;
  // Lexicographically smallest set attaining h among sets of size <= j.
  VertexSet witness;
};

struct CheegerProfile {
  int n = 0;
  // false: values are upper bounds from local search and must not feed a
  // gonality lower bound.
  bool exact = false;
  std::vector<CheegerRow> rows;  // j = 1 .. floor(n/2)

  const CheegerRow& at(int j) const { return rows.at(static_cast<std::size_t>(j) - 1); }
  Rational cheeger_constant() const { return rows.back().h; }
  int max_j() const noexcept { return static_cast<int>(rows.size()); }
};

enum class SubsetEnumeration {
  // Only subsets inducing a connected subgraph. Sufficient: splitting a
  // disconnected U into parts never raises the best ratio (mediant).
  connected,
  // Every subset, via a Gray-code walk.
  all,
};

struct CheegerOptions {
  int exact_max_n = 24;
  SubsetEnumeration enumeration = SubsetEnumeration::connected;
  // Above exact_max_n: local-search upper bounds if true, else throw.
  bool allow_heuristic = true;
  Budget budget;
  int threads = 1;
};

// Requires a graph with at least 2 vertices. Throws BudgetExceeded when the
// exact enumeration runs out of budget.
CheegerProfile cheeger_profile(const Multigraph& g, const CheegerOptions& options = {});

struct SeparatorCertificate {
  int j = 0;
  int n = 0;
  VertexSet separator;
  std::vector<int> component_sizes;  // of V \ separator, by smallest vertex
  // Every smaller set was checked and fails.
  bool optimal = false;
  // Proven lower bound on B_u; equals separator.size() when optimal.
  int lower_bound = 0;

  int size() const noexcept { return static_cast<int>(separator.size()); }
};

struct SeparatorOptions {
  int exact_max_n = 24;
  Budget budget;
  // Caller-proven lower bound on the answer (e.g. B at the next grid point).
  int start_size = 0;
};

// B_u for u = j/n: the fewest vertices whose removal leaves components of at
// most j vertices. This is also the least degree of an effective divisor with
// that property, since trimming every coefficient to 1 keeps the support.
// Reports the lexicographically smallest minimum separator.
SeparatorCertificate min_separator(const Multigraph& g, int j, const SeparatorOptions& options = {});

// min_separator for j = 1..floor(n/2), evaluated from the top down so that
// B at j+1 seeds the search at j.
std::vector<SeparatorCertificate> separator_profile(const Multigraph& g,
                                                    const SeparatorOptions& options = {});

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

// Splits V \ support into unions of components A and B with
// |A| in [T/3, 2T/3], T = |V \ support|: greedily pack components by
// decreasing size under the 2T/3 cap, and if that leaves |A| < T/3 take the
// largest leftover component alone. Throws PreconditionError when some
// component has at least n/2 vertices, or when the largest component exceeds
// 2T/3, in which case no split in the window exists.
Bipartition separator_bipartition(const Multigraph& g, std::span<const Vertex> support);

}  // namespace gonlab
