#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gonlab/expansion.hpp"
#include "gonlab/gonality.hpp"
#include "gonlab/spectral.hpp"

namespace gonlab {

// A lower bound on gonality optimised over the u-grid; u = j/n is the first
// grid point attaining the maximum.
struct LowerBound {
  Rational value;
  int j = 0;
};

// max over j of min{ B_u, h(G) * j }, with u = j/n and h(G) the Cheeger
// constant, so h(G) * u * n = h(G) * j. Needs an exact profile and optimal
// separator certificates for every grid point.
LowerBound separator_bound(const Multigraph& g, const CheegerProfile& profile,
                           std::span<const SeparatorCertificate> separators);

// h_u n / (k + h_u): on a k-regular graph, any effective divisor of smaller
// degree leaves a component of more than u n vertices, so this is a lower
// bound on B_u.
Rational regular_separator_floor(const Rational& h_u, int k, int n);

// max over j of min{ h_u n / (k + h_u), h(G) * j } for k-regular g: the
// separator bound with B_u replaced by regular_separator_floor.
LowerBound regular_cheeger_bound(const Multigraph& g, const CheegerProfile& profile);

// The spectral row of the report; same as spectral_gonality_bound.
SpectralBound spectral_bound(const Multigraph& g, const SpectralSummary& summary);

// Published asymptotic inputs for random cubic graphs. These are not computed
// here; they are fed in so the arithmetic can be reproduced.
struct RandomRegularConstants {
  int k = 3;
  double cheeger_floor = 1.0 / 4.95;  // a.a.s. lower bound on h(G)
  double u = 0.36;                    // grid point of the u-Cheeger estimate
  double u_cheeger_floor = 0.24;      // a.a.s. lower bound on h_u(G) there
};

// min{ h_u / (k + h_u), h * u }: the per-vertex Cheeger-route constant.
double random_regular_cheeger_constant(const RandomRegularConstants& c = {});

// Spectral bound per vertex for algebraic connectivity lambda2, max valence d.
double random_regular_spectral_constant(double lambda2, int d);

// k - 2 sqrt(k - 1), the asymptotic algebraic connectivity of random
// k-regular graphs.
double ramanujan_lambda2(int k);

struct ReportOptions {
  CheegerOptions cheeger;
  SeparatorOptions separators;
  IndependenceOptions independence;
  double tol = 1e-9;
};

struct ReportRow {
  int j = 0;
  Rational h_u;
  Rational expansion;  // h(G) * j
  std::optional<SeparatorCertificate> separator;
  std::optional<Rational> separator_min;  // min{B_u, h(G) j}
  std::optional<Rational> separator_floor;  // regular_separator_floor(h_u)
  std::optional<Rational> floor_min;        // min{floor, h(G) j}
};

struct BoundReport {
  int n = 0;
  std::int64_t m = 0;
  std::optional<int> regular_degree;

  std::optional<CheegerProfile> profile;
  std::vector<ReportRow> rows;

  std::optional<LowerBound> separator;
  std::string separator_status;
  std::optional<LowerBound> cheeger;
  std::string cheeger_status;
  std::optional<SpectralSummary> spectral;
  std::optional<SpectralBound> spectral_value;
  std::string spectral_status;

  GenusBound genus;
  std::optional<IndependenceBound> independence;

  // Final bracket on gon(G): max of the lower-bound ceilings, min of the
  // valid upper bounds.
  int lower = 1;
  int upper = 0;
  bool budget_exhausted = false;
};

// Throws PreconditionError for disconnected graphs. Per-row budget exhaustion
// is recorded in the status strings, not thrown.
BoundReport full_report(const Multigraph& g, const ReportOptions& options = {});

}  // namespace gonlab
