#include "gkosc/matrix_elements.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "gkosc/errors.hpp"

using namespace gkosc;

namespace {

// Reference values for <m| x^{-alpha} |n>, frozen from two independent
// evaluation routes agreeing to far below the stated tolerance.
struct Fixture {
  double A, B, alpha;
  int m, n;
  double value;
};

constexpr Fixture kFixtures[] = {
    {0.0, 1.0, 1.0, 0, 0, 1.1283791670955126},    // 2/sqrt(pi)
    {0.0, 1.0, 1.0, 0, 1, -0.46065886596178064},
    {0.0, 1.0, 1.0, 1, 1, 0.94031597257959381},   // 5/(3 sqrt(pi))
    {0.0, 1.0, 1.0, 1, 2, -0.46257429570369601},
    {0.0, 1.0, 1.0, 2, 3, -0.44834016518895210},
    {0.0, 1.0, 1.0, 3, 3, 0.76770082618462552},
    {0.0, 1.0, 2.0, 0, 2, 1.4605934866804430},    // 4/sqrt(7.5)
    {0.5, 2.0, 1.5, 2, 3, -0.77713632236572134},
    {2.0, 1.0, 0.5, 0, 0, 0.85230472676097389},
    {2.0, 4.0, 2.2, 1, 3, 1.0348807071206980},
    {2.0, 1.0, 1.0, 0, 0, 0.75225277806367505},   // Gamma(2)/Gamma(2.5)
};

}  // namespace

TEST_CASE("closed form reproduces the frozen references") {
  for (const auto& f : kFixtures) {
    const BasisParams p(f.A, f.B);
    CHECK(matel_gk({p, f.m, f.n, f.alpha}) ==
          doctest::Approx(f.value).epsilon(1e-13));
  }
}

TEST_CASE("directed sum agrees in both index orders") {
  for (const auto& f : kFixtures) {
    const BasisParams p(f.A, f.B);
    CHECK(matel_gk_directed({p, f.m, f.n, f.alpha}) ==
          doctest::Approx(f.value).epsilon(1e-12));
    CHECK(matel_gk_directed({p, f.n, f.m, f.alpha}) ==
          doctest::Approx(f.value).epsilon(1e-12));
  }
}

TEST_CASE("swap symmetry of the dispatching form is structural") {
  const BasisParams p(0.5, 2.0);
  for (int m = 0; m < 6; ++m) {
    for (int n = 0; n < 6; ++n) {
      CHECK(matel_gk({p, m, n, 1.3}) == matel_gk({p, n, m, 1.3}));
    }
  }
}

TEST_CASE("single-sum first-row specialization") {
  for (const auto& f : kFixtures) {
    if (f.m != 0) continue;
    const BasisParams p(f.A, f.B);
    CHECK(matel_row0({p, 0, f.n, f.alpha}) ==
          doctest::Approx(f.value).epsilon(1e-13));
  }
  CHECK_THROWS_AS(matel_row0({BasisParams(0.0, 1.0), 1, 2, 1.0}),
                  InvalidIndex);
}

TEST_CASE("odd-Hermite route equals the closed form at A=0, B=1") {
  const BasisParams p(0.0, 1.0);
  for (double alpha : {0.5, 1.0, 2.5}) {
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 5; ++n) {
        CHECK(matel_hermite(m, n, alpha) ==
              doctest::Approx(matel_gk({p, m, n, alpha})).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("diagonal entries are positive, near-diagonal signs alternate") {
  const BasisParams p(1.0, 1.0);
  for (int n = 0; n < 8; ++n) {
    CHECK(matel_gk({p, n, n, 1.0}) > 0.0);
  }
  for (int n = 0; n < 7; ++n) {
    CHECK(matel_gk({p, n, n + 1, 1.0}) < 0.0);
  }
}

TEST_CASE("vanishing exponent gives the identity matrix") {
  for (double A : {0.0, 2.0}) {
    const BasisParams p(A, 1.0);
    for (int m = 0; m < 5; ++m) {
      for (int n = 0; n < 5; ++n) {
        const double target = (m == n) ? 1.0 : 0.0;
        CHECK(matel_gk({p, m, n, 1e-8}) ==
              doctest::Approx(target).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("rescaling B by 4 multiplies every element by 4^{alpha/4}") {
  const double alpha = 1.7;
  const double factor = std::pow(4.0, alpha / 4.0);
  const BasisParams lo(0.5, 0.75), hi(0.5, 3.0);
  for (int m = 0; m < 5; ++m) {
    for (int n = m; n < 5; ++n) {
      CHECK(matel_gk({hi, m, n, alpha}) ==
            doctest::Approx(factor * matel_gk({lo, m, n, alpha}))
                .epsilon(1e-13));
    }
  }
}

TEST_CASE("domain boundary alpha >= 2 + sqrt(1+4A) is rejected") {
  const BasisParams p(0.0, 1.0);  // boundary at alpha = 3
  CHECK_THROWS_AS(matel_gk({p, 0, 0, 3.0}), DomainDiverges);
  CHECK_THROWS_AS(matel_gk({p, 0, 0, 3.5}), DomainDiverges);
  CHECK_NOTHROW(matel_gk({p, 0, 0, 2.999}));
  const BasisParams q(2.0, 1.0);  // boundary at alpha = 5
  CHECK_NOTHROW(matel_gk({q, 0, 0, 4.5}));
  CHECK_THROWS_AS(matel_gk({q, 0, 0, 5.0}), DomainDiverges);
  CHECK_THROWS_AS(matel_gk({p, 0, 0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(matel_gk({p, 0, 0, -1.0}), std::domain_error);
}

TEST_CASE("negative indices are rejected") {
  const BasisParams p(0.0, 1.0);
  CHECK_THROWS_AS(matel_gk({p, -1, 0, 1.0}), InvalidIndex);
  CHECK_THROWS_AS(matel_gk({p, 0, -3, 1.0}), InvalidIndex);
}

TEST_CASE("cancellation diagnostics are populated") {
  const BasisParams p(0.0, 1.0);
  CancellationDiag diag;
  (void)matel_gk({p, 2, 3, 1.0}, &diag);
  CHECK(diag.cancellation_ratio >= 1.0);
  CHECK_FALSE(diag.low_confidence);
  CHECK(diag.alpha_max == doctest::Approx(3.0));
}

TEST_CASE("precomputed entry table covers m,n <= 3 symmetrically") {
  const auto& e = explicit_entry(2, 1);
  CHECK(e.m == 1);
  CHECK(e.n == 2);
  CHECK_THROWS_AS(explicit_entry(0, 4), IndexOutOfTable);
  CHECK_THROWS_AS(explicit_entry(4, 4), IndexOutOfTable);
  CHECK_THROWS_AS(explicit_entry(-1, 0), InvalidIndex);
}

TEST_CASE("precomputed entries match the frozen references") {
  for (const auto& f : kFixtures) {
    if (f.m > 3 || f.n > 3) continue;
    const BasisParams p(f.A, f.B);
    CHECK(explicit_table_eval(f.m, f.n, f.alpha, p) ==
          doctest::Approx(f.value).epsilon(1e-13));
  }
}

TEST_CASE("precomputed entries match the closed form off the fixture grid") {
  const BasisParams p(0.5, 1.0);
  for (int m = 0; m <= 3; ++m) {
    for (int n = m; n <= 3; ++n) {
      for (double alpha : {0.3, 1.1, 2.7}) {
        CHECK(explicit_table_eval(m, n, alpha, p) ==
              doctest::Approx(matel_gk({p, m, n, alpha})).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("corrected (3,3) polynomial against its frozen samples") {
  // alpha -> corrected value, superseded value, gap.
  constexpr std::array<std::array<double, 4>, 4> kSamples = {{
      {0.5, 0.77406581629658762, 0.69416224816274632, 0.07990356813384130},
      {1.0, 0.76770082618462552, 0.53262183303972707, 0.23507899314489845},
      {1.5, 1.0465032963928268, 0.49196907654079989, 0.55453421985202696},
      {2.5, 5.9408302907511008, 1.7858447477913531, 4.1549855429597477},
  }};
  const std::array<double, 4> alphas = {0.5, 1.0, 1.5, 2.5};
  const ErratumReport report = erratum_report(alphas);
  REQUIRE(report.samples.size() == 4);
  for (size_t i = 0; i < report.samples.size(); ++i) {
    const auto& s = report.samples[i];
    CHECK(s.alpha == doctest::Approx(kSamples[i][0]));
    CHECK(s.corrected_value == doctest::Approx(kSamples[i][1]).epsilon(1e-13));
    CHECK(s.flawed_value == doctest::Approx(kSamples[i][2]).epsilon(1e-13));
    CHECK(s.observed_gap == doctest::Approx(kSamples[i][3]).epsilon(1e-12));
    CHECK(s.closed_value == doctest::Approx(kSamples[i][1]).epsilon(1e-12));
    CHECK(s.predicted_gap == doctest::Approx(kSamples[i][3]).epsilon(1e-12));
  }
  CHECK(report.max_rel_err_corrected <= 1e-10);
  CHECK(report.max_rel_err_gap <= 1e-9);
  CHECK(report.min_rel_gap >= 1e-3);
  CHECK(report.confirms_correction);
}
