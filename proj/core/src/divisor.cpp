#include "gonlab/divisor.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "gonlab/error.hpp"
#include "gonlab/reduction.hpp"

namespace gonlab {

namespace {

inline void add_chips(Divisor::Chips& target, Divisor::Chips delta) {
#ifndef NDEBUG
  if (__builtin_add_overflow(target, delta, &target)) throw std::overflow_error("chip overflow");
#else
  target += delta;
#endif
}

Divisor::Chips scaled(Divisor::Chips a, Divisor::Chips b) {
  Divisor::Chips out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("chip overflow");
  return out;
}

}  // namespace

Divisor::Divisor(const Multigraph& g) : graph_(&g), chips_(g.vertex_count(), 0) {}

Divisor::Divisor(const Multigraph& g, std::vector<Chips> chips)
    : graph_(&g), chips_(std::move(chips)) {
  if (static_cast<int>(chips_.size()) != g.vertex_count()) {
    throw PreconditionError("divisor length does not match vertex count");
  }
}

Divisor Divisor::point(const Multigraph& g, Vertex v, Chips c) {
  Divisor d(g);
  d.chips_.at(v) = c;
  return d;
}

Divisor Divisor::indicator(const Multigraph& g, std::span<const Vertex> s) {
  Divisor d(g);
  for (Vertex v : s) d.chips_.at(v) += 1;
  return d;
}

Divisor::Chips Divisor::degree() const noexcept {
  return std::accumulate(chips_.begin(), chips_.end(), Chips{0});
}

bool Divisor::is_effective() const noexcept {
  return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c >= 0; });
}

bool Divisor::is_effective_away_from(Vertex v) const noexcept {
  for (Vertex w = 0; w < size(); ++w) {
    if (w != v && chips_[w] < 0) return false;
  }
  return true;
}

VertexSet Divisor::support() const {
  VertexSet s;
  for (Vertex v = 0; v < size(); ++v) {
    if (chips_[v] > 0) s.push_back(v);
  }
  return s;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  if (graph_ != other.graph_) throw PreconditionError("divisors live on different graphs");
  for (std::size_t i = 0; i < chips_.size(); ++i) add_chips(chips_[i], other.chips_[i]);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  if (graph_ != other.graph_) throw PreconditionError("divisors live on different graphs");
  for (std::size_t i = 0; i < chips_.size(); ++i) add_chips(chips_[i], -other.chips_[i]);
  return *this;
}

std::string Divisor::to_string() const {
  std::string out;
  for (Vertex v = 0; v < size(); ++v) {
    if (chips_[v] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(v) + ':' + std::to_string(chips_[v]);
  }
  return out;
}

Divisor fire_vertex(const Divisor& d, Vertex v) {
  const Multigraph& g = d.graph();
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
  Divisor out = d;
  add_chips(out[v], -g.valence(v));
  for (const auto& nb : g.neighbors(v)) add_chips(out[nb.vertex], nb.multiplicity);
  return out;
}

void fire_set_in_place(Divisor& d, std::span<const char> in_set, Divisor::Chips times) {
  const Multigraph& g = d.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_set[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      if (in_set[nb.vertex]) continue;
      const Divisor::Chips flow = scaled(nb.multiplicity, times);
      add_chips(d[v], -flow);
      add_chips(d[nb.vertex], flow);
    }
  }
}

Divisor fire_set(const Divisor& d, std::span<const Vertex> s) {
  std::vector<char> in_set(d.size(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= d.size()) throw PreconditionError("vertex out of range");
    in_set[v] = 1;
  }
  Divisor out = d;
  fire_set_in_place(out, in_set);
  return out;
}

bool is_equivalent(const Divisor& a, const Divisor& b) {
  if (&a.graph() != &b.graph()) return false;
  if (a.degree() != b.degree()) return false;
  if (a.size() == 0) return true;
  return v_reduce(a, 0) == v_reduce(b, 0);
}

Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) k[v] = g.valence(v) - 2;
  return k;
}

Divisor parse_divisor(const Multigraph& g, std::string_view text) {
  Divisor d(g);
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto to_int = [&](std::string_view s) {
    long long value = 0;
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("invalid divisor term in '" + std::string(text) + "'", 0);
    }
    return value;
  };
  if (trim(text).empty()) return d;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view term = text.substr(pos, comma - pos);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("divisor term '" + std::string(trim(term)) + "' is not v:c", 0);
    }
    const long long v = to_int(term.substr(0, colon));
    const long long c = to_int(term.substr(colon + 1));
    if (v < 0 || v >= g.vertex_count()) {
      throw ParseError("divisor vertex " + std::to_string(v) + " out of range", 0);
    }
    add_chips(d[static_cast<Vertex>(v)], c);
    pos = comma + 1;
  }
  return d;
}

}  // namespace gonlab
