#pragma once

#include <span>
#include <vector>

#include "gkosc/matrix_elements.hpp"

namespace gkosc {

// Dense symmetric matrix, lower triangle stored row-major. operator() reads
// either (i,j) order; set() writes both logical halves at once.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  int order() const { return order_; }

  double operator()(int i, int j) const { return tri_[index(i, j)]; }
  void set(int i, int j, double value) { tri_[index(i, j)] = value; }

  double trace() const;
  double frobenius_norm() const;
  // sqrt(2 sum_{i<j} a_ij^2), the quantity the Jacobi sweep drives to zero.
  double offdiag_norm() const;

 private:
  size_t index(int i, int j) const;

  int order_;
  std::vector<double> tri_;
};

struct JacobiOptions {
  double tol = 1e-12;   // stop when offdiag_norm / frobenius_norm <= tol
  int max_sweeps = 50;  // throw NoConvergence beyond this
};

struct EigenSolution {
  std::vector<double> eigenvalues;  // ascending
  // eigenvectors[k] is the unit eigenvector of eigenvalues[k].
  std::vector<std::vector<double>> eigenvectors;
  double residual = 0.0;  // offdiag_norm / frobenius_norm at exit
  int sweeps = 0;
};

// Cyclic row-order Jacobi diagonalization of a dense symmetric matrix.
// Intended for the moderate orders of a variational basis (N <~ few hundred).
EigenSolution jacobi_eigen(const SymMatrix& matrix,
                           const JacobiOptions& options = {});

// Which matrix-element route fills the Hamiltonian.
enum class FillMethod { kClosed, kTermwise, kQuadrature };

// H[m][n] = E_m delta_mn + lambda_c <m| x^{-alpha} |n> over the first
// basis_size basis states. lambda_c may be any real; the caller is
// responsible for choosing a coupling where the truncated problem is
// meaningful.
SymMatrix assemble_hamiltonian(const BasisParams& p, double alpha,
                               double lambda_c, int basis_size,
                               FillMethod method = FillMethod::kClosed);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending Ritz values
  int basis_size = 0;
  double alpha = 0.0;
  double lambda_c = 0.0;
  double residual = 0.0;
  int sweeps = 0;
};

// Assemble and diagonalize in one step.
SpectrumResult spectrum(const BasisParams& p, double alpha, double lambda_c,
                        int basis_size, FillMethod method = FillMethod::kClosed,
                        const JacobiOptions& options = {});

// Ritz ground energies for a growing basis. By the variational principle the
// ground value is non-increasing in basis_size.
std::vector<SpectrumResult> ground_state_sweep(
    const BasisParams& p, double alpha, double lambda_c,
    std::span<const int> basis_sizes, FillMethod method = FillMethod::kClosed,
    const JacobiOptions& options = {});

struct LambdaPoint {
  double lambda_c = 0.0;
  double ground_energy = 0.0;
};

// Ground energy as a function of coupling at fixed basis size; monotone
// increasing for a repulsive spike.
std::vector<LambdaPoint> lambda_sweep(const BasisParams& p, double alpha,
                                      std::span<const double> lambdas,
                                      int basis_size,
                                      FillMethod method = FillMethod::kClosed,
                                      const JacobiOptions& options = {});

// Exact ground energy of the alpha = 2 spike, where B x^2 + A/x^2 + lambda/x^2
// is again of the solvable form: sqrt(B) (2 + sqrt(1 + 4(A + lambda))).
double alpha2_exact_ground(const BasisParams& p, double lambda_c);

}  // namespace gkosc
