#include "gonlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gonlab/error.hpp"

namespace gonlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Dense {
  int n;
  std::vector<double> a;  // row-major
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

double frobenius(std::span<const double> a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

// values + row-major V (column i = eigenvector i), unsorted.
void jacobi(Dense& a, Dense& v, std::vector<double>& values) {
  const int n = a.n;
  const double norm = frobenius(a.a);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= 1e-15 * norm || off == 0.0) {
      values.resize(n);
      for (int i = 0; i < n; ++i) values[i] = a(i, i);
      return;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  throw Error("Jacobi eigensolver did not converge in 100 sweeps");
}

// Householder tridiagonalisation (EISPACK tred2): on exit v holds the
// orthogonal transform, d the diagonal, e the subdiagonal in e[1..n-1].
void tridiagonalize(Dense& v, std::vector<double>& d, std::vector<double>& e) {
  const int n = v.n;
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int j = 0; j < n; ++j) d[j] = v(n - 1, j);
  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;
      for (int j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }
  for (int i = 0; i < n - 1; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (int k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit QL with Wilkinson-type shifts on the tridiagonal (EISPACK tql2).
void tridiagonal_ql(Dense& v, std::vector<double>& d, std::vector<double>& e) {
  const int n = v.n;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  double f = 0.0;
  double tst1 = 0.0;
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n && std::abs(e[m]) > kEps * tst1) ++m;
    if (m == n) m = n - 1;
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 60) throw Error("QL eigensolver did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            h = v(k, i + 1);
            v(k, i + 1) = s * v(k, i) + c * h;
            v(k, i) = c * v(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > kEps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

double certified_error(std::span<const double> a, int n, const SymmetricEigen& eig) {
  // Residual R = A V - V diag(values) and orthogonality defect V^T V - I.
  double residual = 0.0;
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto vi = eig.vector(i);
    for (int r = 0; r < n; ++r) {
      double av = 0.0;
      for (int k = 0; k < n; ++k) av += a[static_cast<std::size_t>(r) * n + k] * vi[k];
      const double diff = av - eig.values[i] * vi[r];
      residual += diff * diff;
    }
    for (int j = i; j < n; ++j) {
      const auto vj = eig.vector(j);
      double dot = std::inner_product(vi.begin(), vi.end(), vj.begin(), 0.0);
      if (i == j) dot -= 1.0;
      defect += (i == j ? 1.0 : 2.0) * dot * dot;
    }
  }
  residual = std::sqrt(residual);
  defect = std::sqrt(defect);
  const double norm = frobenius(a);
  // Weyl on V^T A V = diag(values) + V^T R, corrected for V being only
  // nearly orthogonal, plus the rounding of the check itself.
  const double slack = std::max(1.0 - defect, 0.5);
  return (residual + defect * norm) / slack + 4.0 * n * kEps * std::max(norm, 1.0);
}

}  // namespace

SymmetricEigen symmetric_eigen(std::span<const double> a, int n, EigenMethod method) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * n) {
    throw PreconditionError("matrix size mismatch");
  }
  SymmetricEigen out;
  out.n = n;
  if (n == 0) return out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[static_cast<std::size_t>(i) * n + j] != a[static_cast<std::size_t>(j) * n + i]) {
        throw PreconditionError("matrix is not symmetric");
      }
  if (method == EigenMethod::automatic) {
    method = n <= 64 ? EigenMethod::jacobi : EigenMethod::tridiagonal_ql;
  }

  Dense v{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  std::vector<double> values;
  if (method == EigenMethod::jacobi) {
    Dense work{n, std::vector<double>(a.begin(), a.end())};
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;
    jacobi(work, v, values);
  } else {
    v.a.assign(a.begin(), a.end());
    std::vector<double> e;
    tridiagonalize(v, values, e);
    tridiagonal_ql(v, values, e);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return values[x] < values[y]; });
  out.values.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = values[order[i]];
    for (int k = 0; k < n; ++k) out.vectors[static_cast<std::size_t>(i) * n + k] = v(k, order[i]);
  }
  out.error_bound = certified_error(a, n, out);
  return out;
}

SpectralSummary algebraic_connectivity(const Multigraph& g, double tol, EigenMethod method) {
  const int n = g.vertex_count();
  if (n < 2) throw PreconditionError("algebraic connectivity needs at least 2 vertices");
  if (!(tol > 0)) throw PreconditionError("tolerance must be positive");

  // Positive-semidefinite convention: -L(G) = D - A.
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    m[static_cast<std::size_t>(v) * n + v] = g.valence(v);
    for (const auto& nb : g.neighbors(v)) m[static_cast<std::size_t>(v) * n + nb.vertex] = -nb.multiplicity;
  }
  const SymmetricEigen eig = symmetric_eigen(m, n, method);
  if (eig.error_bound > tol) {
    throw Error("eigensolver error bound " + std::to_string(eig.error_bound) +
                " exceeds tolerance");
  }

  SpectralSummary s;
  s.n = n;
  s.d_max = g.max_valence();
  s.connected = g.is_connected();
  s.spectrum = eig.values;
  s.error_bound = eig.error_bound;
  s.lambda2 = s.connected ? std::max(eig.values[1], 0.0) : 0.0;
  const auto fiedler = eig.vector(1);
  s.fiedler_vector.assign(fiedler.begin(), fiedler.end());
  return s;
}

double separator_lower_bound(int size_a, int size_b, double lambda2, int d, int n) {
  if (size_a < 1 || size_b < 1) throw PreconditionError("separated sets must be non-empty");
  if (size_a + size_b > n) throw PreconditionError("|A| + |B| exceeds n");
  if (!(lambda2 > 0)) throw PreconditionError("lambda2 must be positive");
  const double denom = static_cast<double>(d) * n - lambda2 * (size_a + size_b);
  if (!(denom > 0)) throw PreconditionError("non-positive denominator in separator bound");
  return 4.0 * lambda2 * size_a * size_b / denom;
}

double spectral_gonality_formula(double lambda2, double d, double n) {
  return n / (2.0 * lambda2) *
         (-(7.0 * lambda2 + 9.0 * d) +
          3.0 * std::sqrt(9.0 * lambda2 * lambda2 + 14.0 * d * lambda2 + 9.0 * d * d));
}

double spectral_gonality_root(double lambda2, double d, double n) {
  // x = 2c / (b + sqrt(b^2 + 4ac)) with a = lambda2, b = (7 lambda2 + 9d) n,
  // c = 8 lambda2 n^2; sqrt(b^2 + 4ac) = 3n sqrt(9 lambda2^2 + 14 d lambda2 + 9 d^2).
  const double b = (7.0 * lambda2 + 9.0 * d) * n;
  const double disc = 3.0 * n * std::sqrt(9.0 * lambda2 * lambda2 + 14.0 * d * lambda2 + 9.0 * d * d);
  return 16.0 * lambda2 * n * n / (b + disc);
}

double spectral_quadratic(double x, double lambda2, double d, double n) {
  return lambda2 * x * x + (7.0 * lambda2 + 9.0 * d) * n * x - 8.0 * lambda2 * n * n;
}

SpectralBound spectral_gonality_bound(const SpectralSummary& summary) {
  if (!summary.connected || !(summary.lambda2 > 0)) {
    throw PreconditionError("spectral gonality bound requires a connected graph");
  }
  const double d = summary.d_max;
  const double n = summary.n;
  SpectralBound b;
  b.value = spectral_gonality_root(summary.lambda2, d, n);
  const double lo_lambda = std::max(summary.lambda2 - summary.error_bound, 0.0);
  const double rounding = 1e-12 * std::max(1.0, b.value);
  b.lower = lo_lambda > 0 ? spectral_gonality_root(lo_lambda, d, n) - rounding : 0.0;
  b.upper = spectral_gonality_root(summary.lambda2 + summary.error_bound, d, n) + rounding;
  b.applicable = summary.n >= 3;
  b.ceiling = b.applicable ? static_cast<std::int64_t>(std::ceil(std::max(b.lower, 0.0))) : 0;
  return b;
}

}  // namespace gonlab
