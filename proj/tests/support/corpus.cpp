#include "corpus.hpp"

#include <stdexcept>

#include "gonlab/randgraph.hpp"

namespace gonlab::corpus {

namespace {

Multigraph connected_sample(Rng& rng, int kind) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Multigraph g;
    switch (kind) {
      case 0: {
        const int n = 3 + static_cast<int>(uniform_below(rng, 8));
        g = sample_configuration(2, n, ConfigMode::simple, rng);
        break;
      }
      case 1: {
        const int n = 2 * (2 + static_cast<int>(uniform_below(rng, 4)));  // 4..10
        const auto mode = uniform_below(rng, 2) ? ConfigMode::simple : ConfigMode::multigraph;
        g = sample_configuration(3, n, mode, rng);
        break;
      }
      case 2: {
        const int n = 5 + static_cast<int>(uniform_below(rng, 6));  // 5..10
        const auto mode = uniform_below(rng, 2) ? ConfigMode::simple : ConfigMode::multigraph;
        g = sample_configuration(4, n, mode, rng);
        break;
      }
      default: {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));  // 2..10
        const double p = 0.25 + 0.5 * static_cast<double>(uniform_below(rng, 1000)) / 1000.0;
        g = sample_gnp(n, p, rng);
        break;
      }
    }
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("could not draw a connected sample");
}

}  // namespace

std::vector<Sample> small_connected(std::uint64_t seed, int count) {
  static const char* kinds[] = {"config-k2", "config-k3", "config-k4", "gnp"};
  std::vector<Sample> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int kind = i % 4;
    out.push_back({std::string(kinds[kind]) + "#" + std::to_string(i), connected_sample(rng, kind)});
  }
  return out;
}

std::vector<Sample> regular_up_to_16(std::uint64_t seed, int count) {
  std::vector<Sample> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int k = i % 2 ? 4 : 3;
    for (;;) {
      int n = 6 + static_cast<int>(uniform_below(rng, 11));  // 6..16
      if ((k * n) % 2) ++n;
      Multigraph g = sample_configuration(k, n, ConfigMode::simple, rng);
      if (g.is_connected()) {
        out.push_back({"regular-k" + std::to_string(k) + "#" + std::to_string(i), std::move(g)});
        break;
      }
    }
  }
  return out;
}

}  // namespace gonlab::corpus
