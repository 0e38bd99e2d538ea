#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gonlab {

using Vertex = int;

// Sorted list of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  int multiplicity = 0;
};

// Loopless undirected multigraph on vertices 0..n-1. Immutable once built, so
// a single instance can be shared by concurrent searches.
class Multigraph {
 public:
  Multigraph() = default;

  // Repeated pairs accumulate multiplicity. Throws PreconditionError on
  // self-loops or out-of-range endpoints.
  static Multigraph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return m_; }

  // Number of parallel edges between v and w; 0 when v == w.
  int multiplicity(Vertex v, Vertex w) const {
    return mult_[static_cast<std::size_t>(v) * n_ + w];
  }
  int valence(Vertex v) const { return valence_[v]; }
  int max_valence() const noexcept { return max_valence_; }
  std::span<const Neighbor> neighbors(Vertex v) const { return adj_[v]; }

  // k when every vertex has valence k.
  std::optional<int> regular_degree() const;
  bool is_simple() const;
  bool is_connected() const;

  // One entry per edge (u < v), parallel edges repeated, sorted.
  std::vector<Edge> edges() const;

  // FNV-1a over n and the sorted edge list; stable across platforms.
  std::uint64_t hash() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  int max_valence_ = 0;
  std::vector<int> mult_;
  std::vector<int> valence_;
  std::vector<std::vector<Neighbor>> adj_;
};

// Dense Laplacian with the negative-valence diagonal convention:
// L(i,i) = -val(i), L(i,j) = multiplicity(i,j).
struct Laplacian {
  int n = 0;
  std::vector<std::int64_t> entries;  // row-major

  std::int64_t operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * n + j];
  }
};

Laplacian laplacian(const Multigraph& g);

// First Betti number m - n + 1. Throws PreconditionError when disconnected.
std::int64_t genus(const Multigraph& g);

// Connected components of the subgraph induced on V \ excluded, each sorted,
// ordered by smallest vertex.
std::vector<VertexSet> components(const Multigraph& g, std::span<const Vertex> excluded);

std::vector<int> bfs_distances(const Multigraph& g, Vertex source);

bool is_bipartite(const Multigraph& g);

// Edge-list text: "n m" header then m lines "u v"; '#' lines are comments.
Multigraph parse_edge_list(std::string_view text);
Multigraph read_edge_list(const std::filesystem::path& path);
std::string to_edge_list(const Multigraph& g);

// Builtin graphs: "pappus", "k4", "complete:<n>", "cycle:<n>", "path:<n>",
// "star:<n>". Returns nullopt for unknown names.
std::optional<Multigraph> named_graph(std::string_view id);

// A named graph id, or else a path to an edge-list file.
Multigraph resolve_graph(std::string_view source);

// Pappus graph with the ring layout used throughout this library:
// 0..5 middle ring, 6..11 outer ring, 12..17 inner ring.
Multigraph pappus_graph();
VertexSet pappus_middle_ring();
VertexSet pappus_outer_ring();
VertexSet pappus_inner_ring();

Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);
Multigraph star_graph(int leaves);

}  // namespace gonlab
