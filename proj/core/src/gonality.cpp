#include "gonlab/gonality.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "gonlab/error.hpp"
#include "gonlab/parallel.hpp"
#include "gonlab/reduction.hpp"

namespace gonlab {

namespace {

using Mask = std::uint64_t;

VertexSet greedy_independent_set(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = static_cast<int>(g.neighbors(v).size());
  VertexSet chosen;
  for (;;) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
    }
    if (best < 0) break;
    chosen.push_back(best);
    removed[best] = 1;
    for (const auto& nb : g.neighbors(best)) {
      if (removed[nb.vertex]) continue;
      removed[nb.vertex] = 1;
      for (const auto& nb2 : g.neighbors(nb.vertex)) --degree[nb2.vertex];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Multigraph& g, BudgetMeter& meter) : meter_(meter) {
    const int n = g.vertex_count();
    adj_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v)
      for (const auto& nb : g.neighbors(v)) adj_[v] |= Mask{1} << nb.vertex;
  }

  void run(Mask initial_best) {
    best_ = initial_best;
    const int n = static_cast<int>(adj_.size());
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    search(0, all);
  }

  Mask best() const { return best_; }

 private:
  void search(Mask chosen, Mask candidates) {
    if (!meter_.charge()) return;
    // Vertices with at most one neighbour among the candidates can always be
    // taken.
    bool changed = true;
    while (changed && candidates) {
      changed = false;
      for (Mask rest = candidates; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (!(candidates >> v & 1)) continue;
        if (std::popcount(adj_[v] & candidates) <= 1) {
          chosen |= Mask{1} << v;
          candidates &= ~(adj_[v] | (Mask{1} << v));
          changed = true;
        }
      }
    }
    if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best_)) return;
    if (!candidates) {
      best_ = chosen;
      return;
    }
    int pivot = -1;
    int pivot_degree = -1;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int deg = std::popcount(adj_[v] & candidates);
      if (deg > pivot_degree) {
        pivot = v;
        pivot_degree = deg;
      }
    }
    const Mask bit = Mask{1} << pivot;
    search(chosen | bit, candidates & ~(adj_[pivot] | bit));
    search(chosen, candidates & ~bit);
  }

  std::vector<Mask> adj_;
  BudgetMeter& meter_;
  Mask best_ = 0;
};

}  // namespace

std::pair<VertexSet, bool> maximum_independent_set(const Multigraph& g, const Budget& budget) {
  VertexSet greedy = greedy_independent_set(g);
  const int n = g.vertex_count();
  if (n > 64) return {std::move(greedy), false};

  Mask initial = 0;
  for (Vertex v : greedy) initial |= Mask{1} << v;
  BudgetMeter meter(budget);
  IndependentSetSearch search(g, meter);
  search.run(initial);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (search.best() >> v & 1) out.push_back(v);
  }
  return {std::move(out), !meter.exhausted()};
}

IndependenceBound independence_upper_bound(const Multigraph& g,
                                           const IndependenceOptions& options) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("empty graph");
  auto [set, exact] = maximum_independent_set(g, options.budget);
  IndependenceBound bound{0, std::move(set), exact, Divisor(g)};
  if (n == 1) {
    bound.witness[0] = 1;
    bound.value = 1;
    return bound;
  }
  std::vector<char> in_set(n, 0);
  for (Vertex v : bound.independent_set) in_set[v] = 1;
  for (Vertex w = 0; w < n; ++w) {
    if (in_set[w]) continue;
    int chips = 0;
    for (const auto& nb : g.neighbors(w)) {
      if (in_set[nb.vertex]) chips = std::max(chips, nb.multiplicity);
    }
    bound.witness[w] = chips;
  }
  bound.value = bound.witness.degree();
  return bound;
}

GenusBound genus_upper_bound(const Multigraph& g) {
  const std::int64_t gen = genus(g);
  return {std::max<std::int64_t>(gen, 1), gen == 1};
}

GonalityResult exact_gonality(const Multigraph& g, const GonalityOptions& options) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("empty graph");
  if (!g.is_connected()) throw PreconditionError("gonality search requires a connected graph");

  GonalityResult result;
  const GenusBound by_genus = genus_upper_bound(g);
  const IndependenceBound by_independence = independence_upper_bound(g);
  std::int64_t upper = by_independence.value;
  if (!by_genus.loose) upper = std::min(upper, by_genus.value);
  result.upper = static_cast<int>(upper);

  const int ceiling = options.max_degree > 0
                          ? std::min<int>(options.max_degree, result.upper)
                          : result.upper;
  constexpr std::size_t kBatch = 4096;
  const int threads = std::max(options.threads, 1);
  BudgetMeter meter(options.budget);

  for (int degree = 1; degree <= ceiling; ++degree) {
    EffectiveDivisorEnumerator it(n, degree);
    std::vector<Vertex> batch;
    batch.reserve(kBatch * degree);
    while (!it.done()) {
      batch.clear();
      std::size_t count = 0;
      while (!it.done() && count < kBatch) {
        batch.insert(batch.end(), it.current().begin(), it.current().end());
        it.advance();
        ++count;
      }
      if (!meter.charge(count)) {
        result.budget_exhausted = true;
        result.lower = degree;
        result.cleared_degree = degree - 1;
        return result;
      }
      result.candidates_checked += count;

      const std::size_t chunks = std::min<std::size_t>(count, static_cast<std::size_t>(threads) * 8);
      std::vector<std::size_t> first_hit(chunks, count);
      parallel_for(chunks, threads, [&](std::size_t chunk, std::size_t) {
        const std::size_t begin = chunk * count / chunks;
        const std::size_t end = (chunk + 1) * count / chunks;
        for (std::size_t i = begin; i < end; ++i) {
          Divisor d(g);
          for (int k = 0; k < degree; ++k) d[batch[i * degree + k]] += 1;
          if (has_positive_rank(d)) {
            first_hit[chunk] = i;
            return;
          }
        }
      });
      const std::size_t hit = *std::min_element(first_hit.begin(), first_hit.end());
      if (hit < count) {
        Divisor witness(g);
        for (int k = 0; k < degree; ++k) witness[batch[hit * degree + k]] += 1;
        // Cross-check through the single-base rank query before emitting.
        if (!rank_at_least(witness, 1).holds) {
          throw Error("internal: gonality witness " + witness.to_string() +
                      " rejected by rank check");
        }
        result.certificate = GonalityCertificate{degree, std::move(witness), degree - 1, true};
        result.lower = result.upper = degree;
        result.cleared_degree = degree - 1;
        return result;
      }
    }
    result.cleared_degree = degree;
    result.lower = degree + 1;
  }
  if (result.lower > result.upper) {
    throw Error("internal: no positive-rank divisor up to the proven upper bound");
  }
  return result;
}

}  // namespace gonlab
