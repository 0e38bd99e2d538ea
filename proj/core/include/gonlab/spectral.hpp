#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gonlab/graph.hpp"

namespace gonlab {

enum class EigenMethod {
  automatic,       // jacobi up to 64 vertices, tridiagonal_ql above
  jacobi,          // cyclic Jacobi rotations
  tridiagonal_ql,  // Householder reduction + implicit shifted QL
};

struct SymmetricEigen {
  int n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column-major; column i pairs with values[i]
  // Certified |lambda_i(A) - values[i]| for every i, from the residual
  // ||A V - V diag(values)||_F and the orthogonality defect of V.
  double error_bound = 0.0;

  std::span<const double> vector(int i) const {
    return std::span<const double>(vectors).subspan(static_cast<std::size_t>(i) * n, n);
  }
};

// Eigen-decomposition of a symmetric row-major n x n matrix. Throws Error if
// the iteration cap is hit.
SymmetricEigen symmetric_eigen(std::span<const double> a, int n,
                               EigenMethod method = EigenMethod::automatic);

// The graph Laplacian here is the library's L(G) with its sign flipped,
// i.e. the positive-semidefinite D - A; every eigenvalue below refers to it.
struct SpectralSummary {
  int n = 0;
  int d_max = 0;
  bool connected = false;
  double lambda2 = 0.0;  // exactly 0 when disconnected
  double error_bound = 0.0;
  std::vector<double> spectrum;
  std::vector<double> fiedler_vector;  // unit, orthogonal to the all-ones vector
};

SpectralSummary algebraic_connectivity(const Multigraph& g, double tol = 1e-9,
                                       EigenMethod method = EigenMethod::automatic);

// Vertex-separator lower bound 4 lambda2 |A||B| / (d n - lambda2 |A u B|).
// Throws PreconditionError on empty sides, lambda2 <= 0, or a non-positive
// denominator.
double separator_lower_bound(int size_a, int size_b, double lambda2, int d, int n);

// n/(2 lambda2) * [ -(7 lambda2 + 9d) + 3 sqrt(9 lambda2^2 + 14 d lambda2 + 9 d^2) ],
// evaluated literally.
double spectral_gonality_formula(double lambda2, double d, double n);

// Positive root of lambda2 x^2 + (7 lambda2 + 9d) n x - 8 lambda2 n^2, computed
// without cancellation. Algebraically equal to the formula above.
double spectral_gonality_root(double lambda2, double d, double n);

double spectral_quadratic(double x, double lambda2, double d, double n);

struct SpectralBound {
  double value = 0.0;
  // Bound evaluated at lambda2 -/+ its error bound (the root grows with
  // lambda2), slightly widened for rounding.
  double lower = 0.0;
  double upper = 0.0;
  // ceil(lower): the certified integer lower bound on gonality.
  std::int64_t ceiling = 0;
  // False for n < 3. The derivation needs both sides of the separator
  // nonempty whenever |V \ supp D| = 1, which holds from n = 3 on; K2 is a
  // counterexample (value 1.316, gonality 1). Inapplicable bounds keep their
  // value for display but have ceiling 0.
  bool applicable = true;
};

// Throws PreconditionError for disconnected graphs.
SpectralBound spectral_gonality_bound(const SpectralSummary& summary);

}  // namespace gonlab
