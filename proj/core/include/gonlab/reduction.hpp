#pragma once

#include <cstdint>
#include <optional>

#include "gonlab/budget.hpp"
#include "gonlab/divisor.hpp"

namespace gonlab {

struct BurnResult {
  VertexSet burnt;
  VertexSet unburnt;
  bool fully_burnt = false;
};

// Dhar's burning algorithm from `source`: a vertex catches fire once the
// number of burnt edges reaching it exceeds its chip count. Requires d to be
// effective away from `source`; the fixed point does not depend on scan order.
BurnResult dhar_burn(const Divisor& d, Vertex source);

// The unique v-reduced divisor linearly equivalent to d. Accepts any integer
// divisor on a connected graph.
//
// Stage one clears negative coefficients away from v layer by layer, from the
// farthest BFS layer inwards: firing {w : dist(w, v) < t} moves chips only
// across the t-1 | t boundary, so layer t is topped up without disturbing
// layers beyond it. Stage two repeats Dhar's algorithm and fires the unburnt
// set (as many times as stays legal) until everything burns. Termination:
// every legal firing script avoiding v is bounded componentwise by the script
// that reaches the reduced divisor, and each step strictly grows the script.
Divisor v_reduce(const Divisor& d, Vertex v);

// First vertex v at which the v-reduced form of d carries no chip, or nullopt
// when d has positive rank.
std::optional<Vertex> positive_rank_failure(const Divisor& d);

// Rank >= 1: for every v the v-reduced form of d keeps a chip on v.
bool has_positive_rank(const Divisor& d);

struct RankOptions {
  // Maximum number of effective divisors E to try.
  std::uint64_t max_subtrahends = 10'000'000;
  // Vertex at which d - E is reduced.
  Vertex base = 0;
};

struct RankQuery {
  bool holds = false;
  // First E (in colex order) for which d - E is not equivalent to an
  // effective divisor.
  std::optional<Divisor> failing_subtrahend;
  std::uint64_t checked = 0;
};

// Baker-Norine "rank at least r". Throws BudgetExceeded past max_subtrahends.
RankQuery rank_at_least(const Divisor& d, int r, const RankOptions& options = {});

// Steps through the nondecreasing vertex sequences of length `degree` over
// n vertices in colex order, i.e. through all effective divisors of that
// degree. Shared by rank queries and the gonality search.
class EffectiveDivisorEnumerator {
 public:
  EffectiveDivisorEnumerator(int n, int degree);

  const std::vector<Vertex>& current() const noexcept { return seq_; }
  bool done() const noexcept { return done_; }
  void advance();

  Divisor to_divisor(const Multigraph& g) const;

 private:
  int n_;
  std::vector<Vertex> seq_;
  bool done_ = false;
};

// C(n + d - 1, d), saturating at UINT64_MAX.
std::uint64_t effective_divisor_count(int n, int degree);

}  // namespace gonlab
