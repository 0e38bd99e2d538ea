#include "gonlab/reduction.hpp"

#include <algorithm>
#include <limits>

#include "gonlab/error.hpp"

namespace gonlab {

namespace {

// Burnt flags for d from `source`. Assumes d is effective away from source.
std::vector<char> burn_flags(const Multigraph& g, std::span<const Divisor::Chips> chips,
                             Vertex source) {
  const int n = g.vertex_count();
  std::vector<char> burnt(n, 0);
  std::vector<Divisor::Chips> burnt_edges(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  burnt[source] = 1;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (const auto& nb : g.neighbors(v)) {
      const Vertex w = nb.vertex;
      if (burnt[w]) continue;
      burnt_edges[w] += nb.multiplicity;
      if (burnt_edges[w] > chips[w]) {
        burnt[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return burnt;
}

void require_vertex(const Divisor& d, Vertex v) {
  if (v < 0 || v >= d.size()) throw PreconditionError("vertex out of range");
}

// Stage one of v_reduce: afterwards d is effective away from v.
void clear_debt_away_from(Divisor& d, Vertex v) {
  if (d.is_effective_away_from(v)) return;
  const Multigraph& g = d.graph();
  const int n = g.vertex_count();
  const auto dist = bfs_distances(g, v);
  int max_dist = 0;
  for (int x : dist) {
    if (x < 0) throw PreconditionError("reduction requires a connected graph");
    max_dist = std::max(max_dist, x);
  }
  for (int t = max_dist; t >= 1; --t) {
    Divisor::Chips firings = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (dist[w] != t || d[w] >= 0) continue;
      Divisor::Chips inward = 0;
      for (const auto& nb : g.neighbors(w)) {
        if (dist[nb.vertex] == t - 1) inward += nb.multiplicity;
      }
      firings = std::max(firings, (-d[w] + inward - 1) / inward);
    }
    if (firings == 0) continue;
    std::vector<char> inner(n, 0);
    for (Vertex w = 0; w < n; ++w) inner[w] = dist[w] < t ? 1 : 0;
    fire_set_in_place(d, inner, firings);
  }
}

// Stage two: Dhar iterations from v until everything burns.
void dhar_descend(Divisor& d, Vertex v) {
  const Multigraph& g = d.graph();
  const int n = g.vertex_count();
  for (;;) {
    auto burnt = burn_flags(g, d.chips(), v);
    Divisor::Chips times = std::numeric_limits<Divisor::Chips>::max();
    bool any_unburnt = false;
    for (Vertex w = 0; w < n; ++w) {
      if (burnt[w]) continue;
      any_unburnt = true;
      Divisor::Chips out = 0;
      for (const auto& nb : g.neighbors(w)) {
        if (burnt[nb.vertex]) out += nb.multiplicity;
      }
      if (out > 0) times = std::min(times, d[w] / out);
    }
    if (!any_unburnt) return;
    // An unburnt component with no burnt neighbours means g is disconnected.
    if (times == std::numeric_limits<Divisor::Chips>::max()) {
      throw PreconditionError("reduction requires a connected graph");
    }
    for (char& b : burnt) b = !b;
    fire_set_in_place(d, burnt, std::max<Divisor::Chips>(times, 1));
  }
}

}  // namespace

BurnResult dhar_burn(const Divisor& d, Vertex source) {
  require_vertex(d, source);
  if (!d.is_effective_away_from(source)) {
    throw PreconditionError("dhar_burn needs a divisor effective away from the source");
  }
  const auto burnt = burn_flags(d.graph(), d.chips(), source);
  BurnResult result;
  for (Vertex v = 0; v < d.size(); ++v) (burnt[v] ? result.burnt : result.unburnt).push_back(v);
  result.fully_burnt = result.unburnt.empty();
  return result;
}

Divisor v_reduce(const Divisor& d, Vertex v) {
  require_vertex(d, v);
  Divisor out = d;
  clear_debt_away_from(out, v);
  dhar_descend(out, v);
  return out;
}

std::optional<Vertex> positive_rank_failure(const Divisor& d) {
  if (d.size() == 0) return std::nullopt;
  if (d.degree() < 1) return Vertex{0};
  const bool effective = d.is_effective();
  for (Vertex v = 0; v < d.size(); ++v) {
    // The v-reduced representative maximises the coefficient at v among
    // equivalent divisors effective away from v.
    if (effective && d[v] >= 1) continue;
    if (v_reduce(d, v)[v] < 1) return v;
  }
  return std::nullopt;
}

bool has_positive_rank(const Divisor& d) { return !positive_rank_failure(d).has_value(); }

std::uint64_t effective_divisor_count(int n, int degree) {
  if (degree < 0 || n <= 0) return degree == 0 ? 1 : 0;
  // C(n + degree - 1, degree) built incrementally; exact at each step.
  unsigned __int128 c = 1;
  for (int i = 1; i <= degree; ++i) {
    c = c * static_cast<unsigned>(n - 1 + i) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(c);
}

EffectiveDivisorEnumerator::EffectiveDivisorEnumerator(int n, int degree)
    : n_(n), seq_(std::max(degree, 0), 0), done_(n <= 0 && degree > 0) {
  if (degree < 0) done_ = true;
}

void EffectiveDivisorEnumerator::advance() {
  const int len = static_cast<int>(seq_.size());
  for (int i = 0; i < len; ++i) {
    const Vertex cap = (i + 1 < len) ? seq_[i + 1] : n_ - 1;
    if (seq_[i] < cap) {
      ++seq_[i];
      std::fill(seq_.begin(), seq_.begin() + i, 0);
      return;
    }
  }
  done_ = true;
}

Divisor EffectiveDivisorEnumerator::to_divisor(const Multigraph& g) const {
  Divisor d(g);
  for (Vertex v : seq_) d[v] += 1;
  return d;
}

RankQuery rank_at_least(const Divisor& d, int r, const RankOptions& options) {
  if (r < 0) throw PreconditionError("rank threshold must be non-negative");
  require_vertex(d, options.base);
  RankQuery query;
  if (d.degree() < r) {
    query.failing_subtrahend = Divisor::point(d.graph(), 0, r);
    return query;
  }
  for (EffectiveDivisorEnumerator e(d.size(), r); !e.done(); e.advance()) {
    if (query.checked >= options.max_subtrahends) {
      throw BudgetExceeded("rank_at_least: more than " +
                           std::to_string(options.max_subtrahends) + " subtrahends");
    }
    ++query.checked;
    const Divisor sub = e.to_divisor(d.graph());
    if (!v_reduce(d - sub, options.base).is_effective()) {
      query.failing_subtrahend = sub;
      return query;
    }
  }
  query.holds = true;
  return query;
}

}  // namespace gonlab
