#include "gonlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "gonlab/error.hpp"

namespace gonlab {

Multigraph Multigraph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  Multigraph g;
  g.n_ = n;
  g.mult_.assign(static_cast<std::size_t>(n) * n, 0);
  g.valence_.assign(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    ++g.mult_[static_cast<std::size_t>(u) * n + v];
    ++g.mult_[static_cast<std::size_t>(v) * n + u];
    ++g.valence_[u];
    ++g.valence_[v];
    ++g.m_;
  }
  g.adj_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      if (const int k = g.multiplicity(v, w); k > 0) g.adj_[v].push_back({w, k});
    }
    g.max_valence_ = std::max(g.max_valence_, g.valence_[v]);
  }
  return g;
}

std::optional<int> Multigraph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const int k = valence_[0];
  for (int val : valence_) {
    if (val != k) return std::nullopt;
  }
  return k;
}

bool Multigraph::is_simple() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int k) { return k <= 1; });
}

bool Multigraph::is_connected() const {
  if (n_ <= 1) return true;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<Edge> Multigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (const auto& [w, k] : adj_[u]) {
      if (w <= u) continue;
      for (int i = 0; i < k; ++i) out.push_back({u, w});
    }
  }
  return out;
}

std::uint64_t Multigraph::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const auto& e : edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

Laplacian laplacian(const Multigraph& g) {
  const int n = g.vertex_count();
  Laplacian lap{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)};
  for (Vertex i = 0; i < n; ++i) {
    lap.entries[static_cast<std::size_t>(i) * n + i] = -g.valence(i);
    for (const auto& [j, k] : g.neighbors(i)) lap.entries[static_cast<std::size_t>(i) * n + j] = k;
  }
  return lap;
}

std::int64_t genus(const Multigraph& g) {
  if (!g.is_connected()) throw PreconditionError("genus requires a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

std::vector<int> bfs_distances(const Multigraph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (const auto& nb : g.neighbors(v)) {
      if (dist[nb.vertex] < 0) {
        dist[nb.vertex] = dist[v] + 1;
        queue.push(nb.vertex);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> components(const Multigraph& g, std::span<const Vertex> excluded) {
  const int n = g.vertex_count();
  std::vector<char> blocked(n, 0);
  for (Vertex v : excluded) blocked.at(v) = 1;

  std::vector<VertexSet> out;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (blocked[root] || seen[root]) continue;
    VertexSet comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& nb : g.neighbors(v)) {
        if (!blocked[nb.vertex] && !seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          stack.push_back(nb.vertex);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_bipartite(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (const auto& nb : g.neighbors(v)) {
        if (side[nb.vertex] < 0) {
          side[nb.vertex] = 1 - side[v];
          queue.push(nb.vertex);
        } else if (side[nb.vertex] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

long long parse_count(std::string_view field, int line_no, const char* what) {
  long long value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(field) + "'",
                     line_no);
  }
  return value;
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') {
      if (eol == text.size()) break;
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError("expected two fields, got " + std::to_string(fields.size()), line_no);
    }
    if (!have_header) {
      n = parse_count(fields[0], line_no, "vertex count");
      m = parse_count(fields[1], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError("negative count in header", line_no);
      if (n > 1'000'000) throw ParseError("vertex count too large", line_no);
      have_header = true;
    } else {
      const long long u = parse_count(fields[0], line_no, "endpoint");
      const long long v = parse_count(fields[1], line_no, "endpoint");
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError("endpoint out of range [0, " + std::to_string(n) + ")", line_no);
      }
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
      if (static_cast<long long>(edges.size()) >= m) {
        throw ParseError("more edge lines than the declared " + std::to_string(m), line_no);
      }
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (eol == text.size()) break;
  }
  if (!have_header) throw ParseError("missing 'n m' header", line_no);
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("declared " + std::to_string(m) + " edges but found " +
                         std::to_string(edges.size()),
                     line_no);
  }
  return Multigraph::from_edges(static_cast<int>(n), edges);
}

Multigraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string to_edge_list(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Multigraph pappus_graph() {
  // Ring layout as in the usual drawing, labels 1..18 shifted to 0..17:
  // middle ring 1-6, outer ring 7-12, inner ring 13-18.
  static constexpr int kLabelled[][2] = {
      {13, 16}, {14, 17}, {15, 18},                        // inner diameters
      {1, 7},   {1, 14},  {1, 18},  {2, 8},   {2, 15},  {2, 13},
      {3, 9},   {3, 16},  {3, 14},  {4, 10},  {4, 17},  {4, 15},
      {5, 11},  {5, 18},  {5, 16},  {6, 12},  {6, 13},  {6, 17},
      {7, 8},   {8, 9},   {9, 10},  {10, 11}, {11, 12}, {12, 7},  // outer ring
  };
  std::vector<Edge> edges;
  for (const auto& e : kLabelled) edges.push_back({e[0] - 1, e[1] - 1});
  return Multigraph::from_edges(18, edges);
}

VertexSet pappus_middle_ring() { return {0, 1, 2, 3, 4, 5}; }
VertexSet pappus_outer_ring() { return {6, 7, 8, 9, 10, 11}; }
VertexSet pappus_inner_ring() { return {12, 13, 14, 15, 16, 17}; }

Multigraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Multigraph::from_edges(n, edges);
}

Multigraph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Multigraph::from_edges(n, edges);
}

Multigraph path_graph(int n) {
  if (n < 1) throw PreconditionError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Multigraph::from_edges(n, edges);
}

Multigraph star_graph(int leaves) {
  if (leaves < 0) throw PreconditionError("negative leaf count");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Multigraph::from_edges(leaves + 1, edges);
}

std::optional<Multigraph> named_graph(std::string_view id) {
  if (id == "pappus") return pappus_graph();
  if (id == "k4") return complete_graph(4);

  const auto colon = id.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view family = id.substr(0, colon);
  const std::string_view arg = id.substr(colon + 1);
  int size = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), size);
  if (ec != std::errc() || ptr != arg.data() + arg.size() || size < 0 || size > 100000) {
    return std::nullopt;
  }
  if (family == "cycle") return cycle_graph(size);
  if (family == "path") return path_graph(size);
  if (family == "complete") return complete_graph(size);
  if (family == "star") return star_graph(size);
  return std::nullopt;
}

Multigraph resolve_graph(std::string_view source) {
  if (auto g = named_graph(source)) return *std::move(g);
  return read_edge_list(std::filesystem::path(std::string(source)));
}

}  // namespace gonlab
