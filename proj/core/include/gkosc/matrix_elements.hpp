#pragma once

#include <array>
#include <span>
#include <vector>

#include "gkosc/gk_basis.hpp"

namespace gkosc {

// One matrix-element request <m| x^{-alpha} |n> in the basis of params.
// Valid when m, n >= 0 and 0 < alpha < 2*gamma_p (the integral diverges at
// the origin otherwise).
struct MatElemQuery {
  BasisParams params;
  int m = 0;
  int n = 0;
  double alpha = 1.0;
};

// Numerical health of an alternating-sum evaluation. cancellation_ratio is
// sum_k |t_k| / |sum_k t_k|; values near 1 mean no cancellation, and
// low_confidence flags ratios beyond 1e12 (fewer than ~4 reliable digits).
struct CancellationDiag {
  double cancellation_ratio = 1.0;
  bool low_confidence = false;
  double alpha_max = 0.0;  // divergence threshold 2*gamma_p for the query
};

// Closed-form matrix element. The finite k-sum runs over the smaller index
// (numerically cheapest and stable); the analytic value is symmetric in
// (m, n). Sign convention: state n carries the sign that matches the
// normalized odd Hermite functions at A=0, B=1, so diagonal entries are
// positive and adjacent off-diagonal entries alternate.
double matel_gk(const MatElemQuery& q, CancellationDiag* diag = nullptr);

// Same closed form with the k-sum taken over q.m exactly as written, whether
// or not it is the smaller index. The m <-> n symmetry of this directed form
// is a genuine cross-check of the formula, not a structural identity.
double matel_gk_directed(const MatElemQuery& q, CancellationDiag* diag = nullptr);

// Single-sum specialization for the first row,
//   <0| x^{-alpha} |n> = (-1)^n B^{alpha/4}
//       sqrt(Gamma(g) / (n! Gamma(n+g))) Gamma(g - alpha/2) (alpha/2)_n
//       / Gamma(g).
// Requires q.m == 0.
double matel_row0(const MatElemQuery& q);

// Matrix element in the odd-Hermite-function basis on the half line, the
// A=0, B=1 special case written in Hermite normalization:
//   (-1)^{n+m} 2^{n-m} sqrt((2m+1)!/(2n+1)!) / m!
//     * sum_{k<=m} (-1)^k C(m,k) [Gamma(k + (3-alpha)/2) / Gamma(k + 3/2)]
//       (alpha/2 - k)_n.
// Agrees with matel_gk at A=0, B=1; valid for 0 < alpha < 3.
double matel_hermite(int m, int n, double alpha);

// One precomputed closed-form entry for m, n <= 3:
//   value = (-1)^{m+n} B^{alpha/4} [Gamma(gamma - alpha/2) /
//           Gamma(gamma + gamma_shift)] * P(alpha, gamma) /
//           (scale * sqrt(sqrt_int * prod_o (gamma + o))).
// P is stored as alpha-power coefficients, each a cubic in gamma.
struct ExplicitEntry {
  int m;
  int n;
  int scale;
  int sqrt_int;
  std::vector<int> sqrt_gamma_offsets;
  int gamma_shift;
  std::vector<std::array<double, 4>> poly;
};

// Table lookup; symmetric in (m, n). Throws IndexOutOfTable beyond m,n <= 3.
const ExplicitEntry& explicit_entry(int m, int n);

// Evaluate the tabulated entry. Same domain rules as matel_gk.
double explicit_table_eval(int m, int n, double alpha, const BasisParams& p);

// Regression record for the corrected (3,3) entry at A=0, B=1. The flawed
// polynomial this table supersedes differs from the corrected one by exactly
// 70 alpha (alpha+2)(alpha+4) in the polynomial part.
struct ErratumSample {
  double alpha;
  double closed_value;     // matel_gk(3,3,alpha) at A=0, B=1
  double corrected_value;  // corrected degree-6 polynomial form
  double flawed_value;     // superseded polynomial form
  double predicted_gap;    // Gamma((3-a)/2) 70 a(a+2)(a+4) / (7! Gamma(3/2))
  double observed_gap;     // corrected_value - flawed_value
};

struct ErratumReport {
  std::vector<ErratumSample> samples;
  double max_rel_err_corrected;  // closed vs corrected
  double max_rel_err_gap;        // observed vs predicted gap
  double min_rel_gap;            // |closed - flawed| / |closed|
  bool confirms_correction;
};

// Evaluate the erratum regression at the given alphas (each in (0, 3)).
ErratumReport erratum_report(std::span<const double> alphas);

}  // namespace gkosc
