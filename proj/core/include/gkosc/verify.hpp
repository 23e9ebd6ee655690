#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gkosc::verify {

// One checked quantity. Most cases pass when value <= threshold; cases with
// at_least = true pass when value >= threshold (used for "must differ" and
// "must exceed" style checks).
struct CheckCase {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool at_least = false;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckCase> cases;
  bool pass = false;  // conjunction of the cases
};

// Closed form vs the precomputed entry table, m,n <= 3, sampled alphas,
// A in {0, 0.5, 2}, B = 1.
SuiteReport explicit_table_suite();

// The corrected (3,3) entry: closed form matches the corrected polynomial,
// the superseded polynomial is rejected, and the gap follows
// 70 alpha (alpha+2)(alpha+4).
SuiteReport erratum_suite();

// Closed form vs term-by-term vs quadrature over the full parameter grid.
SuiteReport oracle_triangle_suite();

// |<m|n> - delta_mn| via the alpha = 0 quadrature rule.
SuiteReport orthonormality_suite();

// Odd-Hermite-basis route vs the closed form at A=0, B=1, plus the exact
// unperturbed diagonal 4n + 3.
SuiteReport hermite_suite();

// m <-> n symmetry of the directed sum and the alpha -> 0 identity limit.
SuiteReport symmetry_suite();

// Basis-expansion partial sums: monotone, bounded by the squared norm, and
// capturing the expected mass by N = 40.
SuiteReport parseval_suite();

// Variational alpha = 2 check against the exact shifted-parameter solution.
SuiteReport alpha2_suite();

// After dividing out B^{alpha/4} Gamma(gamma - alpha/2), the element is a
// degree-(m+n) polynomial in alpha; checked by Newton interpolation through
// m+n+1 Chebyshev nodes predicting a held-out node.
SuiteReport degree_property_suite();

// matel(A, 4B) / matel(A, B) == 4^{alpha/4} to near rounding.
SuiteReport b_scaling_suite();

// Suite tokens accepted by run_suite (the CLI surface).
std::vector<std::string> suite_names();

// Dispatch by token: orthonormality, symmetry, oracles, section5, hermite,
// erratum, parseval, alpha2. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(std::string_view name);

}  // namespace gkosc::verify
