#include "gkosc/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gkosc/errors.hpp"
#include "gkosc/oracle.hpp"

namespace gkosc {

SymMatrix::SymMatrix(int order) : order_(order) {
  if (order < 1) throw InvalidIndex("SymMatrix: requires order >= 1");
  tri_.assign(static_cast<size_t>(order) * (order + 1) / 2, 0.0);
}

size_t SymMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= order_ || j >= order_) {
    throw InvalidIndex("SymMatrix: index out of range");
  }
  if (i < j) std::swap(i, j);
  return static_cast<size_t>(i) * (i + 1) / 2 + j;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = (*this)(i, j);
      sum += (i == j ? 1.0 : 2.0) * v * v;
    }
  }
  return std::sqrt(sum);
}

double SymMatrix::offdiag_norm() const {
  double sum = 0.0;
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < i; ++j) {
      const double v = (*this)(i, j);
      sum += 2.0 * v * v;
    }
  }
  return std::sqrt(sum);
}

EigenSolution jacobi_eigen(const SymMatrix& matrix,
                           const JacobiOptions& options) {
  const int n = matrix.order();
  // Work on a full dense copy; rotations touch whole rows/columns.
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = matrix(i, j);
  }
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

  auto at = [&](std::vector<double>& w, int i, int j) -> double& {
    return w[static_cast<size_t>(i) * n + j];
  };
  auto off_over_frob = [&]() {
    double off = 0.0, frob = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double x = a[static_cast<size_t>(i) * n + j];
        frob += x * x;
        if (i != j) off += x * x;
      }
    }
    return frob == 0.0 ? 0.0 : std::sqrt(off / frob);
  };

  EigenSolution sol;
  double residual = off_over_frob();
  int sweeps = 0;
  while (residual > options.tol) {
    if (sweeps >= options.max_sweeps) {
      throw NoConvergence("jacobi_eigen: sweep limit reached");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        // Smaller-angle root of t^2 + 2 t theta - 1 = 0.
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = at(a, p, p), aqq = at(a, q, q);
        at(a, p, p) = app - t * apq;
        at(a, q, q) = aqq + t * apq;
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = at(a, r, p), arq = at(a, r, q);
            at(a, r, p) = arp - s * (arq + tau * arp);
            at(a, p, r) = at(a, r, p);
            at(a, r, q) = arq + s * (arp - tau * arq);
            at(a, q, r) = at(a, r, q);
          }
          const double vrp = at(v, r, p), vrq = at(v, r, q);
          at(v, r, p) = vrp - s * (vrq + tau * vrp);
          at(v, r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    ++sweeps;
    residual = off_over_frob();
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return a[static_cast<size_t>(i) * n + i] < a[static_cast<size_t>(j) * n + j];
  });
  sol.eigenvalues.resize(n);
  sol.eigenvectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    const int col = order[k];
    sol.eigenvalues[k] = a[static_cast<size_t>(col) * n + col];
    for (int r = 0; r < n; ++r) {
      sol.eigenvectors[k][r] = v[static_cast<size_t>(r) * n + col];
    }
  }
  sol.residual = residual;
  sol.sweeps = sweeps;
  return sol;
}

SymMatrix assemble_hamiltonian(const BasisParams& p, double alpha,
                               double lambda_c, int basis_size,
                               FillMethod method) {
  if (basis_size < 1) {
    throw InvalidIndex("assemble_hamiltonian: requires basis_size >= 1");
  }
  SymMatrix h(basis_size);
  for (int m = 0; m < basis_size; ++m) {
    for (int n = m; n < basis_size; ++n) {
      double element = 0.0;
      if (lambda_c != 0.0) {
        const MatElemQuery q{p, m, n, alpha};
        switch (method) {
          case FillMethod::kClosed:
            element = matel_gk(q);
            break;
          case FillMethod::kTermwise:
            element = matel_termwise(q);
            break;
          case FillMethod::kQuadrature:
            element = matel_quadrature(q);
            break;
        }
      }
      double value = lambda_c * element;
      if (m == n) value += energy(p, m);
      h.set(m, n, value);
    }
  }
  return h;
}

SpectrumResult spectrum(const BasisParams& p, double alpha, double lambda_c,
                        int basis_size, FillMethod method,
                        const JacobiOptions& options) {
  const SymMatrix h = assemble_hamiltonian(p, alpha, lambda_c, basis_size, method);
  EigenSolution sol = jacobi_eigen(h, options);
  SpectrumResult out;
  out.eigenvalues = std::move(sol.eigenvalues);
  out.basis_size = basis_size;
  out.alpha = alpha;
  out.lambda_c = lambda_c;
  out.residual = sol.residual;
  out.sweeps = sol.sweeps;
  return out;
}

std::vector<SpectrumResult> ground_state_sweep(const BasisParams& p,
                                               double alpha, double lambda_c,
                                               std::span<const int> basis_sizes,
                                               FillMethod method,
                                               const JacobiOptions& options) {
  std::vector<SpectrumResult> results;
  results.reserve(basis_sizes.size());
  for (const int n : basis_sizes) {
    results.push_back(spectrum(p, alpha, lambda_c, n, method, options));
  }
  return results;
}

std::vector<LambdaPoint> lambda_sweep(const BasisParams& p, double alpha,
                                      std::span<const double> lambdas,
                                      int basis_size, FillMethod method,
                                      const JacobiOptions& options) {
  std::vector<LambdaPoint> points;
  points.reserve(lambdas.size());
  for (const double lc : lambdas) {
    const SpectrumResult r = spectrum(p, alpha, lc, basis_size, method, options);
    points.push_back({lc, r.eigenvalues.front()});
  }
  return points;
}

double alpha2_exact_ground(const BasisParams& p, double lambda_c) {
  const double shifted = p.A() + lambda_c;
  if (!(shifted >= 0.0)) {
    throw std::domain_error("alpha2_exact_ground: requires A + lambda >= 0");
  }
  return p.lam() * (2.0 + std::sqrt(1.0 + 4.0 * shifted));
}

}  // namespace gkosc
