#pragma once

// Seeded graph collections shared by the property tests and the acceptance
// binary.

#include <cstdint>
#include <string>
#include <vector>

#include "gonlab/graph.hpp"

namespace gonlab::corpus {

struct Sample {
  std::string label;
  Multigraph graph;
};

// Connected graphs with 2..10 vertices: configuration-model k in {2, 3, 4}
// (simple and multigraph modes) and Erdos-Renyi fillers.
std::vector<Sample> small_connected(std::uint64_t seed = 20241019, int count = 240);

// Connected simple k-regular graphs (k in {3, 4}) with at most 16 vertices.
std::vector<Sample> regular_up_to_16(std::uint64_t seed = 7, int count = 60);

}  // namespace gonlab::corpus
