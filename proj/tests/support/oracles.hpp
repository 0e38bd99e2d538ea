#pragma once

// Slow, independent reference implementations used only by tests. None of
// these call into the reduction, expansion or spectral modules.

#include <cstdint>
#include <span>
#include <vector>

#include "gonlab/divisor.hpp"
#include "gonlab/graph.hpp"
#include "gonlab/rational.hpp"

namespace gonlab::oracle {

// Divisor classes via the adjugate of the reduced Laplacian: with tau the
// number of spanning trees and M = tau * L0^{-1} (integral), x lies in the
// Laplacian lattice iff sum(x) = 0 and M x' = 0 mod tau, x' = x minus entry 0.
class ClassKey {
 public:
  explicit ClassKey(const Multigraph& g);
  std::int64_t tau() const noexcept { return tau_; }
  // (degree, M x' mod tau): equal keys <=> linearly equivalent.
  std::vector<std::int64_t> key(std::span<const std::int64_t> chips) const;
  bool equivalent(const Divisor& a, const Divisor& b) const;
  bool in_lattice(std::span<const std::int64_t> x) const;

 private:
  int n_;
  std::int64_t tau_ = 1;
  std::vector<std::int64_t> adj_;  // (n-1) x (n-1), entries reduced mod tau
};

// Every vertex-removal class check done by brute force over effective
// divisors of the same degree.
bool equivalent_to_effective(const ClassKey& classes, const Divisor& d);
bool positive_rank(const ClassKey& classes, const Divisor& d);

// Smallest degree of a positive-rank effective divisor, by class sets.
int gonality(const Multigraph& g);

// min |dU|/|U| over 1 <= |U| <= j, all 2^n subsets.
Rational cheeger_u(const Multigraph& g, int j);
// Fewest vertices whose removal leaves components of size <= j, all subsets.
std::vector<int> separator_sizes(const Multigraph& g);  // index j = 1..n, [0] unused
int independence_number(const Multigraph& g);

// Spectrum of D - A via Eigen, ascending.
std::vector<double> laplacian_spectrum(const Multigraph& g);

// Spanning tree count (matrix-tree theorem, exact).
std::int64_t spanning_trees(const Multigraph& g);

}  // namespace gonlab::oracle
