#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gonlab/graph.hpp"

namespace gonlab {

// Integer chip configuration on the vertices of a Multigraph. Holds a
// non-owning pointer to its graph, which must outlive the divisor.
class Divisor {
 public:
  using Chips = std::int64_t;

  explicit Divisor(const Multigraph& g);
  Divisor(const Multigraph& g, std::vector<Chips> chips);

  // c chips on v, zero elsewhere.
  static Divisor point(const Multigraph& g, Vertex v, Chips c = 1);
  // One chip on each vertex of s.
  static Divisor indicator(const Multigraph& g, std::span<const Vertex> s);

  const Multigraph& graph() const noexcept { return *graph_; }
  int size() const noexcept { return static_cast<int>(chips_.size()); }

  Chips operator[](Vertex v) const { return chips_[v]; }
  Chips& operator[](Vertex v) { return chips_[v]; }
  std::span<const Chips> chips() const noexcept { return chips_; }

  Chips degree() const noexcept;
  bool is_effective() const noexcept;
  bool is_effective_away_from(Vertex v) const noexcept;

  // Vertices with a positive coefficient. Only meaningful for effective
  // divisors; callers never ask for the support of anything else.
  VertexSet support() const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.graph_ == b.graph_ && a.chips_ == b.chips_;
  }

  // Literal form "v:c,v:c" listing the nonzero coefficients; "" for zero.
  std::string to_string() const;

 private:
  const Multigraph* graph_;
  std::vector<Chips> chips_;
};

Divisor fire_vertex(const Divisor& d, Vertex v);
Divisor fire_set(const Divisor& d, std::span<const Vertex> s);

// Fires the marked set `times` times in place. `in_set` has one flag per
// vertex. This is the hot path used by the reduction engine.
void fire_set_in_place(Divisor& d, std::span<const char> in_set, Divisor::Chips times = 1);

// Linear equivalence, decided by comparing 0-reduced representatives.
// Divisors on different graphs, or of different degree, are never equivalent.
bool is_equivalent(const Divisor& a, const Divisor& b);

// K(v) = val(v) - 2.
Divisor canonical_divisor(const Multigraph& g);

// Parses "0:1,4:2" (whitespace tolerated, repeated vertices accumulate).
Divisor parse_divisor(const Multigraph& g, std::string_view text);

}  // namespace gonlab
