#include "gonlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "gonlab/error.hpp"

namespace gonlab {

namespace {

void require_exact(const CheegerProfile& profile, const Multigraph& g) {
  if (!profile.exact) {
    throw PreconditionError("Cheeger values from local search are upper bounds; "
                            "they cannot support a gonality lower bound");
  }
  if (profile.n != g.vertex_count()) throw PreconditionError("profile belongs to another graph");
}

}  // namespace

LowerBound separator_bound(const Multigraph& g, const CheegerProfile& profile,
                           std::span<const SeparatorCertificate> separators) {
  require_exact(profile, g);
  if (static_cast<int>(separators.size()) != profile.max_j()) {
    throw PreconditionError("need one separator certificate per grid point");
  }
  const Rational h = profile.cheeger_constant();
  std::optional<LowerBound> best;
  for (const auto& cert : separators) {
    if (!cert.optimal) throw PreconditionError("separator certificate is not optimal");
    const Rational row = std::min(Rational(cert.size()), h * cert.j);
    if (!best || row > best->value) best = LowerBound{row, cert.j};
  }
  if (!best) throw PreconditionError("empty grid");
  return *best;
}

Rational regular_separator_floor(const Rational& h_u, int k, int n) {
  return h_u * n / (h_u + k);
}

LowerBound regular_cheeger_bound(const Multigraph& g, const CheegerProfile& profile) {
  require_exact(profile, g);
  const auto k = g.regular_degree();
  if (!k) throw PreconditionError("graph is not regular");
  const Rational h = profile.cheeger_constant();
  std::optional<LowerBound> best;
  for (const auto& row : profile.rows) {
    const Rational value =
        std::min(regular_separator_floor(row.h, *k, profile.n), h * row.j);
    if (!best || value > best->value) best = LowerBound{value, row.j};
  }
  if (!best) throw PreconditionError("empty grid");
  return *best;
}

SpectralBound spectral_bound(const Multigraph& g, const SpectralSummary& summary) {
  if (summary.n != g.vertex_count()) throw PreconditionError("summary belongs to another graph");
  return spectral_gonality_bound(summary);
}

double random_regular_cheeger_constant(const RandomRegularConstants& c) {
  return std::min(c.u_cheeger_floor / (c.k + c.u_cheeger_floor), c.cheeger_floor * c.u);
}

double random_regular_spectral_constant(double lambda2, int d) {
  return spectral_gonality_formula(lambda2, d, 1.0);
}

double ramanujan_lambda2(int k) { return k - 2.0 * std::sqrt(k - 1.0); }

BoundReport full_report(const Multigraph& g, const ReportOptions& options) {
  if (g.vertex_count() < 2) throw PreconditionError("report needs at least 2 vertices");
  if (!g.is_connected()) throw PreconditionError("report requires a connected graph");

  BoundReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.regular_degree = g.regular_degree();

  std::vector<std::int64_t> lower_candidates{1};

  try {
    r.profile = cheeger_profile(g, options.cheeger);
  } catch (const BudgetExceeded&) {
    r.budget_exhausted = true;
    r.separator_status = r.cheeger_status = "budget exhausted in Cheeger enumeration";
  }

  if (r.profile) {
    const Rational h = r.profile->cheeger_constant();
    for (const auto& prow : r.profile->rows) {
      ReportRow row;
      row.j = prow.j;
      row.h_u = prow.h;
      row.expansion = h * prow.j;
      if (r.regular_degree) {
        row.separator_floor = regular_separator_floor(prow.h, *r.regular_degree, r.n);
        row.floor_min = std::min(*row.separator_floor, row.expansion);
      }
      r.rows.push_back(std::move(row));
    }

    if (!r.profile->exact) {
      r.separator_status = r.cheeger_status =
          "skipped: n above the exact Cheeger cap (local-search values are upper bounds)";
    } else {
      const auto seps = separator_profile(g, options.separators);
      const bool all_optimal =
          std::all_of(seps.begin(), seps.end(), [](const auto& c) { return c.optimal; });
      for (std::size_t i = 0; i < seps.size(); ++i) {
        r.rows[i].separator = seps[i];
        if (seps[i].optimal) {
          r.rows[i].separator_min = std::min(Rational(seps[i].size()), r.rows[i].expansion);
        }
      }
      if (all_optimal) {
        r.separator = separator_bound(g, *r.profile, seps);
        r.separator_status = "ok";
        lower_candidates.push_back(r.separator->value.ceil());
      } else {
        r.budget_exhausted = true;
        r.separator_status = "budget exhausted in separator search";
      }
      if (r.regular_degree) {
        r.cheeger = regular_cheeger_bound(g, *r.profile);
        r.cheeger_status = "ok";
        lower_candidates.push_back(r.cheeger->value.ceil());
      } else {
        r.cheeger_status = "inapplicable: graph is not regular";
      }
    }
  }

  r.spectral = algebraic_connectivity(g, options.tol);
  r.spectral_value = spectral_bound(g, *r.spectral);
  r.spectral_status = r.spectral_value->applicable ? "ok" : "inapplicable: needs n >= 3";
  if (r.spectral_value->applicable) lower_candidates.push_back(r.spectral_value->ceiling);

  r.genus = genus_upper_bound(g);
  r.independence = independence_upper_bound(g, options.independence);
  std::int64_t upper = r.independence->value;
  if (!r.genus.loose) upper = std::min(upper, r.genus.value);

  r.lower = static_cast<int>(*std::max_element(lower_candidates.begin(), lower_candidates.end()));
  r.upper = static_cast<int>(upper);
  return r;
}

}  // namespace gonlab
