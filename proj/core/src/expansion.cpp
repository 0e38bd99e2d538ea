#include "gonlab/expansion.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "gonlab/error.hpp"
#include "gonlab/parallel.hpp"

namespace gonlab {

namespace {

using Mask = std::uint64_t;

VertexSet mask_to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

// Lexicographic order of the sorted vertex lists of a and b.
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (!diff) return false;
  const int p = std::countr_zero(diff);
  if (a >> p & 1) return (b >> p) != 0;
  return (a >> p) == 0;
}

struct SizeBest {
  std::int64_t boundary = std::numeric_limits<std::int64_t>::max();
  Mask witness = 0;

  void offer(std::int64_t b, Mask m) {
    if (b < boundary || (b == boundary && lex_less(m, witness))) {
      boundary = b;
      witness = m;
    }
  }
};

// Per-size minima of |boundary(U)| over the enumerated subsets.
class SubsetScan {
 public:
  SubsetScan(const Multigraph& g, int max_size) : g_(g), max_size_(max_size) {
    const int n = g.vertex_count();
    adj_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v)
      for (const auto& nb : g.neighbors(v)) adj_[v] |= Mask{1} << nb.vertex;
  }

  std::int64_t edges_into(Vertex w, Mask s) const {
    if (!(adj_[w] & s)) return 0;
    std::int64_t e = 0;
    for (const auto& nb : g_.neighbors(w)) {
      if (s >> nb.vertex & 1) e += nb.multiplicity;
    }
    return e;
  }

  // ESU enumeration of the connected sets whose smallest vertex is root.
  bool connected_from(Vertex root, std::vector<SizeBest>& best, BudgetMeter& meter) const {
    const int n = g_.vertex_count();
    const Mask above = root + 1 >= 64 ? 0 : (~Mask{0} << (root + 1)) & full_mask(n);
    const Mask start = Mask{1} << root;
    std::uint64_t pending = 0;
    bool ok = true;
    auto extend = [&](auto&& self, Mask s, int size, std::int64_t boundary, Mask ext,
                      Mask closed) -> void {
      best[size].offer(boundary, s);
      if (++pending == 1024) {
        ok = ok && meter.charge(pending);
        pending = 0;
      }
      if (!ok || size == max_size_) return;
      while (ext) {
        const Vertex w = std::countr_zero(ext);
        ext &= ext - 1;
        const Mask bit = Mask{1} << w;
        const Mask grown_ext = ext | (adj_[w] & ~closed & above);
        const std::int64_t b = boundary + g_.valence(w) - 2 * edges_into(w, s);
        self(self, s | bit, size + 1, b, grown_ext, closed | adj_[w] | bit);
        if (!ok) return;
      }
    };
    extend(extend, start, 1, g_.valence(root), adj_[root] & above, adj_[root] | start);
    return ok && meter.charge(pending);
  }

  // Gray-code walk over all 2^n subsets.
  bool all_subsets(std::vector<SizeBest>& best, BudgetMeter& meter) const {
    const int n = g_.vertex_count();
    Mask s = 0;
    int size = 0;
    std::int64_t boundary = 0;
    const Mask total = Mask{1} << n;
    for (Mask i = 1; i < total; ++i) {
      const Vertex w = std::countr_zero(i);
      const Mask bit = Mask{1} << w;
      if (s & bit) {
        s &= ~bit;
        --size;
        boundary += 2 * edges_into(w, s) - g_.valence(w);
      } else {
        boundary += g_.valence(w) - 2 * edges_into(w, s);
        s |= bit;
        ++size;
      }
      if (size <= max_size_) best[size].offer(boundary, s);
      if ((i & 0xfff) == 0 && !meter.charge(0x1000)) return false;
    }
    return true;
  }

  static Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

 private:
  const Multigraph& g_;
  int max_size_;
  std::vector<Mask> adj_;
};

CheegerProfile profile_from_sizes(int n, const std::vector<SizeBest>& best, bool exact) {
  CheegerProfile profile;
  profile.n = n;
  profile.exact = exact;
  bool have = false;
  Rational h;
  Mask witness = 0;
  for (int j = 1; j <= n / 2; ++j) {
    const auto& cand = best[j];
    if (cand.boundary != std::numeric_limits<std::int64_t>::max()) {
      const Rational ratio(cand.boundary, j);
      if (!have || ratio < h || (ratio == h && lex_less(cand.witness, witness))) {
        h = ratio;
        witness = cand.witness;
        have = true;
      }
    }
    profile.rows.push_back({j, h, mask_to_set(witness)});
  }
  return profile;
}

// Greedy growth from every start vertex; yields upper bounds on h_u.
CheegerProfile heuristic_profile(const Multigraph& g) {
  const int n = g.vertex_count();
  const int max_size = n / 2;
  std::vector<std::int64_t> best(max_size + 1, std::numeric_limits<std::int64_t>::max());
  std::vector<VertexSet> best_set(max_size + 1);
  std::vector<char> in(n);
  std::vector<std::int64_t> into(n);  // edges from each vertex into the grown set
  for (Vertex start = 0; start < n; ++start) {
    std::fill(in.begin(), in.end(), 0);
    std::fill(into.begin(), into.end(), 0);
    VertexSet members;
    std::int64_t boundary = 0;
    Vertex next = start;
    for (int size = 1; size <= max_size; ++size) {
      boundary += g.valence(next) - 2 * into[next];
      in[next] = 1;
      members.push_back(next);
      for (const auto& nb : g.neighbors(next)) into[nb.vertex] += nb.multiplicity;
      if (boundary < best[size]) {
        best[size] = boundary;
        best_set[size] = members;
        std::sort(best_set[size].begin(), best_set[size].end());
      }
      next = -1;
      std::int64_t next_gain = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (in[w]) continue;
        const std::int64_t gain = g.valence(w) - 2 * into[w];
        if (next < 0 || gain < next_gain) {
          next = w;
          next_gain = gain;
        }
      }
      if (next < 0) break;
    }
  }
  CheegerProfile profile;
  profile.n = n;
  profile.exact = false;
  Rational h;
  VertexSet witness;
  bool have = false;
  for (int j = 1; j <= max_size; ++j) {
    if (best[j] != std::numeric_limits<std::int64_t>::max()) {
      const Rational ratio(best[j], j);
      if (!have || ratio < h) {
        h = ratio;
        witness = best_set[j];
        have = true;
      }
    }
    profile.rows.push_back({j, h, witness});
  }
  return profile;
}

// Component sizes of V \ removed, or an empty vector as soon as one exceeds
// `limit`.
bool components_within(const std::vector<Mask>& adj, Mask remaining, int limit,
                       std::vector<int>* sizes) {
  while (remaining) {
    Mask comp = remaining & (~remaining + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask reach = 0;
      for (Mask f = frontier; f; f &= f - 1) reach |= adj[std::countr_zero(f)];
      frontier = reach & remaining & ~comp;
      comp |= frontier;
      if (std::popcount(comp) > limit) return false;
    }
    if (sizes) sizes->push_back(std::popcount(comp));
    remaining &= ~comp;
  }
  return true;
}

VertexSet greedy_separator(const Multigraph& g, int j) {
  const int n = g.vertex_count();
  VertexSet removed;
  for (;;) {
    const auto comps = components(g, removed);
    auto largest = std::max_element(comps.begin(), comps.end(),
                                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (largest == comps.end() || static_cast<int>(largest->size()) <= j) break;
    std::vector<char> in_comp(n, 0);
    for (Vertex v : *largest) in_comp[v] = 1;
    Vertex pick = largest->front();
    int pick_degree = -1;
    for (Vertex v : *largest) {
      int deg = 0;
      for (const auto& nb : g.neighbors(v)) deg += in_comp[nb.vertex] ? nb.multiplicity : 0;
      if (deg > pick_degree) {
        pick = v;
        pick_degree = deg;
      }
    }
    removed.insert(std::upper_bound(removed.begin(), removed.end(), pick), pick);
  }
  return removed;
}

// Fewest separator vertices compatible with counting alone: the n - s
// survivors form at least ceil((n - s)/j) components, each touching the
// separator (g connected), and s vertices have at most s * d edges.
int component_count_bound(int n, int j, int d) {
  if (d == 0) return 0;
  for (int s = 0; s <= n; ++s) {
    const int comps = (n - s + j - 1) / j;
    if (comps <= 1 || static_cast<long long>(s) * d >= comps) return s;
  }
  return n;
}

}  // namespace

std::int64_t edge_boundary(const Multigraph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) in.at(v) = 1;
  std::int64_t boundary = 0;
  for (Vertex v : s) {
    for (const auto& nb : g.neighbors(v)) {
      if (!in[nb.vertex]) boundary += nb.multiplicity;
    }
  }
  return boundary;
}

CheegerProfile cheeger_profile(const Multigraph& g, const CheegerOptions& options) {
  const int n = g.vertex_count();
  if (n < 2) throw PreconditionError("Cheeger profile needs at least 2 vertices");
  if (n > options.exact_max_n || n > 63) {
    if (!options.allow_heuristic) {
      throw PreconditionError("graph has " + std::to_string(n) +
                              " vertices, above the exact Cheeger cap of " +
                              std::to_string(std::min(options.exact_max_n, 63)));
    }
    return heuristic_profile(g);
  }

  const int max_size = n / 2;
  const SubsetScan scan(g, max_size);
  BudgetMeter meter(options.budget);
  std::vector<SizeBest> best(max_size + 1);

  if (options.enumeration == SubsetEnumeration::all) {
    if (!scan.all_subsets(best, meter)) throw BudgetExceeded("Cheeger enumeration budget exhausted");
    return profile_from_sizes(n, best, true);
  }

  // Roots are independent blocks of the enumeration; results merge by the
  // same total order, so the outcome does not depend on scheduling.
  std::vector<std::vector<SizeBest>> per_root(n, std::vector<SizeBest>(max_size + 1));
  std::vector<char> completed(n, 0);
  parallel_for(static_cast<std::size_t>(n), options.threads, [&](std::size_t root, std::size_t) {
    completed[root] = scan.connected_from(static_cast<Vertex>(root), per_root[root], meter);
  });
  if (std::find(completed.begin(), completed.end(), 0) != completed.end()) {
    throw BudgetExceeded("Cheeger enumeration budget exhausted");
  }
  for (const auto& local : per_root) {
    for (int s = 1; s <= max_size; ++s) {
      if (local[s].boundary != std::numeric_limits<std::int64_t>::max()) {
        best[s].offer(local[s].boundary, local[s].witness);
      }
    }
  }
  return profile_from_sizes(n, best, true);
}

SeparatorCertificate min_separator(const Multigraph& g, int j, const SeparatorOptions& options) {
  const int n = g.vertex_count();
  if (j < 1 || 2 * j > n) throw PreconditionError("grid index j must satisfy 1 <= j <= n/2");
  SeparatorCertificate cert;
  cert.j = j;
  cert.n = n;

  auto finish = [&](VertexSet sep, bool optimal, int lower) {
    cert.separator = std::move(sep);
    for (const auto& comp : components(g, cert.separator)) {
      cert.component_sizes.push_back(static_cast<int>(comp.size()));
    }
    cert.optimal = optimal;
    cert.lower_bound = optimal ? cert.size() : lower;
    return cert;
  };

  const int start =
      g.is_connected()
          ? std::max(options.start_size, component_count_bound(n, j, g.max_valence()))
          : options.start_size;
  if (n > options.exact_max_n || n > 63) {
    return finish(greedy_separator(g, j), false, start);
  }

  std::vector<Mask> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (const auto& nb : g.neighbors(v)) adj[v] |= Mask{1} << nb.vertex;
  const Mask all = SubsetScan::full_mask(n);
  BudgetMeter meter(options.budget);

  for (int s = start; s <= n; ++s) {
    std::vector<int> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      if (!meter.charge()) return finish(greedy_separator(g, j), false, s);
      Mask sep = 0;
      for (int v : idx) sep |= Mask{1} << v;
      if (components_within(adj, all & ~sep, j, nullptr)) {
        return finish(mask_to_set(sep), true, s);
      }
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int k = i + 1; k < s; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  throw Error("internal: no separator found");
}

std::vector<SeparatorCertificate> separator_profile(const Multigraph& g,
                                                    const SeparatorOptions& options) {
  const int n = g.vertex_count();
  std::vector<SeparatorCertificate> out(static_cast<std::size_t>(n / 2));
  int floor_size = options.start_size;
  for (int j = n / 2; j >= 1; --j) {
    SeparatorOptions local = options;
    local.start_size = floor_size;
    out[j - 1] = min_separator(g, j, local);
    floor_size = std::max(floor_size, out[j - 1].lower_bound);
  }
  return out;
}

Bipartition separator_bipartition(const Multigraph& g, std::span<const Vertex> support) {
  const int n = g.vertex_count();
  auto comps = components(g, support);
  std::size_t total = 0;
  for (const auto& c : comps) {
    if (2 * c.size() >= static_cast<std::size_t>(n)) {
      throw PreconditionError("a component of the complement has at least n/2 vertices");
    }
    total += c.size();
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  // Window [T/3, 2T/3] tested as 3|A| >= T and 3|A| <= 2T.
  std::vector<char> in_a(comps.size(), 0);
  std::size_t a_size = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (3 * (a_size + comps[i].size()) <= 2 * total) {
      in_a[i] = 1;
      a_size += comps[i].size();
    }
  }
  if (3 * a_size < total) {
    // Every leftover component overflows the cap when added, so each has more
    // than T/3 vertices; the largest one becomes A on its own.
    std::size_t pick = comps.size();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (!in_a[i] && (pick == comps.size() || comps[i].size() > comps[pick].size())) pick = i;
    }
    if (pick == comps.size() || 3 * comps[pick].size() > 2 * total) {
      throw PreconditionError("largest component exceeds two thirds of the complement; "
                              "no balanced split exists");
    }
    std::fill(in_a.begin(), in_a.end(), 0);
    in_a[pick] = 1;
  }
  Bipartition out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& side = in_a[i] ? out.a : out.b;
    side.insert(side.end(), comps[i].begin(), comps[i].end());
  }
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

}  // namespace gonlab
