#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gonlab/graph.hpp"
#include "gonlab/rational.hpp"

namespace gonlab {

// All sampling uses std::mt19937_64, whose output sequence is fixed by the
// C++ standard, with an in-house unbiased bounded draw, so samples are
// reproducible across platforms and standard libraries.
using Rng = std::mt19937_64;

enum class ConfigMode {
  multigraph,  // keep parallel edges, resample on loops
  simple,      // resample until loop- and parallel-free
};

struct ConfigModelParams {
  int k = 3;
  int n = 0;
  std::uint64_t seed = 0;
  ConfigMode mode = ConfigMode::simple;
  int max_resamples = 100'000;
};

// Uniform in [0, bound) by rejection; bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// splitmix64(seed ^ splitmix64(index)): per-sample stream seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform perfect matching of the k n half-edges (Fisher-Yates shuffle, then
// consecutive pairs), projected to a multigraph. Every matching is equally
// likely because every permutation is, and each matching arises from the same
// number of permutations. Resampling on rejection keeps the result uniform on
// the accepted slice. Throws PreconditionError on bad parameters and
// BudgetExceeded after max_resamples rejections.
Multigraph sample_configuration(int k, int n, ConfigMode mode, Rng& rng, int max_resamples = 100'000);

// Seeded directly from params.seed.
Multigraph sample_configuration(const ConfigModelParams& params);

// The graph of sample `index` in run_experiment.
Multigraph experiment_sample(const ConfigModelParams& params, std::uint64_t index);

// Erdos-Renyi G(n, p), each pair included independently.
Multigraph sample_gnp(int n, double p, Rng& rng);

struct ExperimentCaps {
  int gonality_cap = 12;  // exact gonality when n <= cap
  int cheeger_cap = 20;   // exact Cheeger profile and separators when n <= cap
  std::uint64_t gonality_budget = 50'000'000;
  int threads = 1;
  // Reported: fraction of samples whose spectral bound per vertex reaches this.
  double spectral_threshold = 0.0486;
};

struct ExperimentRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::uint64_t graph_hash = 0;
  bool connected = false;
  bool simple = false;
  double lambda2 = 0.0;
  double lambda2_error = 0.0;
  std::optional<double> spectral_bound;
  std::optional<double> spectral_per_vertex;
  std::optional<std::vector<Rational>> cheeger_profile;  // h at j = 1..n/2
  std::optional<Rational> separator_bound;
  std::optional<Rational> cheeger_bound;
  std::optional<int> gonality;
  std::optional<int> upper_bound;
  // False when an exact gonality contradicts one of the bounds.
  bool sandwich_ok = true;
  std::string status;
};

struct Quantiles {
  double mean = 0, min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

struct ExperimentSummary {
  std::uint64_t samples = 0;
  std::uint64_t connected = 0;
  std::optional<Quantiles> lambda2;
  std::optional<Quantiles> spectral_per_vertex;
  double spectral_threshold = 0.0;
  double fraction_above_threshold = 0.0;
  std::uint64_t sandwich_violations = 0;
  std::string note;
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;
  ExperimentSummary summary;
};

// Records come back ordered by index and do not depend on caps.threads.
ExperimentResult run_experiment(const ConfigModelParams& params, std::uint64_t samples,
                                const ExperimentCaps& caps = {});

Quantiles quantiles(std::vector<double> values);

}  // namespace gonlab
