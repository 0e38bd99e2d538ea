#pragma once

#include <cstdint>
#include <optional>

#include "gonlab/budget.hpp"
#include "gonlab/divisor.hpp"

namespace gonlab {

struct GonalityCertificate {
  int value = 0;
  Divisor witness;
  // Every effective divisor of degree <= cleared_degree was checked and
  // lacks positive rank. For a complete certificate cleared_degree == value-1.
  int cleared_degree = 0;
  bool exhaustive = false;
};

struct GonalityOptions {
  // Highest degree to search; 0 means "up to the best known upper bound".
  int max_degree = 0;
  // One step per candidate divisor.
  Budget budget;
  int threads = 1;
};

struct GonalityResult {
  std::optional<GonalityCertificate> certificate;
  // Bracket known when the search stops early: lower <= gon(G) <= upper.
  int lower = 1;
  int upper = 0;
  int cleared_degree = 0;
  std::uint64_t candidates_checked = 0;
  bool budget_exhausted = false;

  bool certified() const noexcept { return certificate.has_value(); }
};

// Ascending-degree search over all effective divisors in colex order. The
// reported witness is the colex-first positive-rank divisor of minimum degree
// regardless of thread count.
GonalityResult exact_gonality(const Multigraph& g, const GonalityOptions& options = {});

struct GenusBound {
  std::int64_t value = 0;
  // Set for genus 1, where max(genus, 1) = 1 can undercut the true gonality
  // (cycles have gonality 2). A loose bound must not be used as an upper bound.
  bool loose = false;
};

// max(genus, 1).
GenusBound genus_upper_bound(const Multigraph& g);

struct IndependenceOptions {
  // Branch-and-bound nodes before falling back to the best set found so far.
  Budget budget = Budget::steps(20'000'000);
};

struct IndependenceBound {
  std::int64_t value = 0;
  VertexSet independent_set;
  // True when independent_set is a maximum independent set.
  bool exact = false;
  // Positive-rank divisor of degree `value`: each vertex w outside the set
  // gets max over set members s of multiplicity(w, s) chips. On simple graphs
  // that is one chip per vertex outside the set, i.e. value = n - |set|.
  Divisor witness;
};

IndependenceBound independence_upper_bound(const Multigraph& g,
                                           const IndependenceOptions& options = {});

// Exact for n <= 64 within the budget; otherwise a greedy maximal set.
// The flag reports exactness.
std::pair<VertexSet, bool> maximum_independent_set(const Multigraph& g, const Budget& budget);

}  // namespace gonlab
