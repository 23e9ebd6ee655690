#include "gkosc/matrix_elements.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gkosc/errors.hpp"
#include "gkosc/specfun.hpp"

namespace gkosc {

namespace {

constexpr double kLowConfidenceRatio = 1e12;

void check_indices(int m, int n) {
  if (m < 0 || n < 0) {
    throw InvalidIndex("matrix element: requires m >= 0 and n >= 0");
  }
}

void check_alpha(double alpha, double gamma) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("matrix element: requires alpha > 0");
  }
  if (alpha >= 2.0 * gamma) {
    throw DomainDiverges("matrix element: alpha >= 2 + sqrt(1+4A)");
  }
}

struct KSum {
  double scaled_sum = 0.0;  // sum of terms scaled by exp(-log_scale)
  double log_scale = 0.0;   // magnitude of the largest term
  double ratio = 1.0;       // sum |t_k| / |sum t_k|
};

// The alternating finite sum shared by matel_gk_directed and matel_hermite:
//   sum_{k=0}^{m} (-1)^k C(m,k) [Gamma(k+g-alpha/2)/Gamma(k+g)]
//                 (alpha/2 - k)_n.
// Terms are collected in log space, rescaled by the largest magnitude, and
// added with compensated summation.
KSum closed_ksum(int m, int n, double alpha, double g) {
  std::vector<SignedLog> terms;
  terms.reserve(static_cast<size_t>(m) + 1);
  double max_log = -std::numeric_limits<double>::infinity();
  const double log_m_fact = log_gamma(m + 1.0);
  for (int k = 0; k <= m; ++k) {
    const SignedLog poch = pochhammer_signed(0.5 * alpha - k, n);
    if (poch.is_zero()) continue;
    const double log_binom =
        log_m_fact - log_gamma(k + 1.0) - log_gamma(m - k + 1.0);
    const double logmag = log_binom + log_gamma(k + g - 0.5 * alpha) -
                          log_gamma(k + g) + poch.logmag();
    const int sign = (k % 2 == 0 ? 1 : -1) * poch.sign();
    terms.push_back(SignedLog::from_log(sign, logmag));
    if (logmag > max_log) max_log = logmag;
  }
  KSum out;
  if (terms.empty()) return out;
  out.log_scale = max_log;
  double sum = 0.0, comp = 0.0, abs_sum = 0.0;
  for (const SignedLog& t : terms) {
    const double v = t.value_scaled(max_log);
    abs_sum += std::abs(v);
    const double y = v - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
  }
  out.scaled_sum = sum;
  out.ratio = sum == 0.0 ? std::numeric_limits<double>::infinity()
                         : abs_sum / std::abs(sum);
  return out;
}

void fill_diag(CancellationDiag* diag, double ratio, double gamma) {
  if (!diag) return;
  diag->cancellation_ratio = ratio;
  diag->low_confidence = !(ratio <= kLowConfidenceRatio);
  diag->alpha_max = 2.0 * gamma;
}

double polyval_alpha_gamma(const std::vector<std::array<double, 4>>& poly,
                           double alpha, double gamma) {
  double acc = 0.0;
  for (size_t i = poly.size(); i-- > 0;) {
    const auto& c = poly[i];
    const double coeff = ((c[3] * gamma + c[2]) * gamma + c[1]) * gamma + c[0];
    acc = acc * alpha + coeff;
  }
  return acc;
}

// Degree-6 polynomial parts of the (3,3) entry at gamma = 3/2 (ascending
// powers of alpha): the corrected coefficients and the superseded flawed
// ones. They differ by 70 alpha (alpha+2)(alpha+4).
constexpr std::array<double, 7> kErratumCorrected = {5040.0, -3408.0, 2080.0,
                                                     -384.0, 106.0,   -6.0,
                                                     1.0};
constexpr std::array<double, 7> kErratumFlawed = {5040.0, -3968.0, 1660.0,
                                                  -454.0, 106.0,   -6.0,
                                                  1.0};

double polyval(std::span<const double> c, double x) {
  double acc = 0.0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

}  // namespace

double matel_gk_directed(const MatElemQuery& q, CancellationDiag* diag) {
  check_indices(q.m, q.n);
  const double g = q.params.gamma_p();
  check_alpha(q.alpha, g);
  const int m = q.m, n = q.n;
  const KSum ks = closed_ksum(m, n, q.alpha, g);
  fill_diag(diag, ks.ratio, g);
  if (ks.scaled_sum == 0.0) return 0.0;
  // Prefactor (C_n C_m / 2) B^{(alpha-2g)/4} Gamma(g)^2 / Gamma(n+g), with
  // the parity factor fixing the sign convention of the basis.
  const double logpref =
      0.5 * (norm_const_sq(q.params, m).logmag() +
             norm_const_sq(q.params, n).logmag()) -
      std::log(2.0) + 0.25 * (q.alpha - 2.0 * g) * std::log(q.params.B()) +
      2.0 * log_gamma(g) - log_gamma(n + g);
  const int parity = ((m + n) % 2 == 0) ? 1 : -1;
  return parity * ks.scaled_sum * std::exp(ks.log_scale + logpref);
}

double matel_gk(const MatElemQuery& q, CancellationDiag* diag) {
  MatElemQuery sorted = q;
  if (sorted.m > sorted.n) std::swap(sorted.m, sorted.n);
  return matel_gk_directed(sorted, diag);
}

double matel_row0(const MatElemQuery& q) {
  if (q.m != 0) throw InvalidIndex("matel_row0: requires m == 0");
  check_indices(q.m, q.n);
  const double g = q.params.gamma_p();
  check_alpha(q.alpha, g);
  const int n = q.n;
  const SignedLog poch = pochhammer_signed(0.5 * q.alpha, n);
  if (poch.is_zero()) return 0.0;
  const double logmag = 0.25 * q.alpha * std::log(q.params.B()) +
                        0.5 * (log_gamma(g) - log_gamma(n + 1.0) -
                               log_gamma(n + g)) +
                        log_gamma(g - 0.5 * q.alpha) - log_gamma(g) +
                        poch.logmag();
  const int parity = (n % 2 == 0) ? 1 : -1;
  return parity * poch.sign() * std::exp(logmag);
}

double matel_hermite(int m, int n, double alpha) {
  check_indices(m, n);
  check_alpha(alpha, 1.5);
  const KSum ks = closed_ksum(m, n, alpha, 1.5);
  if (ks.scaled_sum == 0.0) return 0.0;
  const double logpref = (n - m) * std::log(2.0) +
                         0.5 * (log_gamma(2.0 * m + 2.0) -
                                log_gamma(2.0 * n + 2.0)) -
                         log_gamma(m + 1.0);
  const int parity = ((m + n) % 2 == 0) ? 1 : -1;
  return parity * ks.scaled_sum * std::exp(ks.log_scale + logpref);
}

const ExplicitEntry& explicit_entry(int m, int n) {
  check_indices(m, n);
  if (m > 3 || n > 3) {
    throw IndexOutOfTable("explicit_entry: table covers m,n <= 3");
  }
  // Entries keyed by (min, max). Polynomial coefficients are listed in
  // ascending powers of alpha; each is {c0, c1, c2, c3} for
  // c0 + c1 g + c2 g^2 + c3 g^3.
  static const std::vector<ExplicitEntry> table = {
      {0, 0, 1, 1, {}, 0, {{{1, 0, 0, 0}}}},
      {0, 1, 2, 1, {0}, 0, {{{0, 0, 0, 0}}, {{1, 0, 0, 0}}}},
      {0, 2, 4, 2, {0, 1}, 0, {{{0, 0, 0, 0}}, {{2, 0, 0, 0}}, {{1, 0, 0, 0}}}},
      {0, 3, 8, 6, {0, 1, 2}, 0,
       {{{0, 0, 0, 0}}, {{8, 0, 0, 0}}, {{6, 0, 0, 0}}, {{1, 0, 0, 0}}}},
      {1, 1, 4, 1, {}, 1,
       {{{0, 4, 0, 0}}, {{-2, 0, 0, 0}}, {{1, 0, 0, 0}}}},
      {1, 2, 8, 2, {1}, 1,
       {{{0, 0, 0, 0}}, {{0, 8, 0, 0}}, {{-2, 0, 0, 0}}, {{1, 0, 0, 0}}}},
      {1, 3, 16, 6, {1, 2}, 1,
       {{{0, 0, 0, 0}},
        {{0, 24, 0, 0}},
        {{-4, 12, 0, 0}},
        {{0, 0, 0, 0}},
        {{1, 0, 0, 0}}}},
      {2, 2, 32, 1, {}, 2,
       {{{0, 32, 32, 0}},
        {{-16, -32, 0, 0}},
        {{12, 16, 0, 0}},
        {{-4, 0, 0, 0}},
        {{1, 0, 0, 0}}}},
      {2, 3, 32, 12, {2}, 2,
       {{{0, 0, 0, 0}},
        {{0, 96, 96, 0}},
        {{-32, -48, 0, 0}},
        {{20, 24, 0, 0}},
        {{-4, 0, 0, 0}},
        {{1, 0, 0, 0}}}},
      {3, 3, 384, 1, {}, 3,
       {{{0, 768, 1152, 384}},
        {{-384, -1152, -576, 0}},
        {{352, 720, 288, 0}},
        {{-168, -144, 0, 0}},
        {{52, 36, 0, 0}},
        {{-6, 0, 0, 0}},
        {{1, 0, 0, 0}}}},
  };
  const int lo = std::min(m, n), hi = std::max(m, n);
  for (const auto& e : table) {
    if (e.m == lo && e.n == hi) return e;
  }
  throw IndexOutOfTable("explicit_entry: missing entry");  // unreachable
}

double explicit_table_eval(int m, int n, double alpha, const BasisParams& p) {
  const ExplicitEntry& e = explicit_entry(m, n);
  const double g = p.gamma_p();
  check_alpha(alpha, g);
  double radicand = e.sqrt_int;
  for (const int o : e.sqrt_gamma_offsets) radicand *= g + o;
  const double logmag = 0.25 * alpha * std::log(p.B()) +
                        log_gamma(g - 0.5 * alpha) -
                        log_gamma(g + e.gamma_shift);
  const double pvalue = polyval_alpha_gamma(e.poly, alpha, g);
  const int parity = ((m + n) % 2 == 0) ? 1 : -1;
  return parity * std::exp(logmag) * pvalue / (e.scale * std::sqrt(radicand));
}

ErratumReport erratum_report(std::span<const double> alphas) {
  ErratumReport report;
  report.max_rel_err_corrected = 0.0;
  report.max_rel_err_gap = 0.0;
  report.min_rel_gap = std::numeric_limits<double>::infinity();
  const BasisParams p(0.0, 1.0);
  const double log_denominator = log_gamma(8.0) + log_gamma(1.5);  // 7! G(3/2)
  for (const double alpha : alphas) {
    check_alpha(alpha, 1.5);
    ErratumSample s;
    s.alpha = alpha;
    s.closed_value = matel_gk({p, 3, 3, alpha});
    const double pref = std::exp(log_gamma(1.5 - 0.5 * alpha) - log_denominator);
    s.corrected_value = pref * polyval(kErratumCorrected, alpha);
    s.flawed_value = pref * polyval(kErratumFlawed, alpha);
    s.predicted_gap = pref * 70.0 * alpha * (alpha + 2.0) * (alpha + 4.0);
    s.observed_gap = s.corrected_value - s.flawed_value;
    report.max_rel_err_corrected = std::max(
        report.max_rel_err_corrected,
        std::abs(s.closed_value - s.corrected_value) / std::abs(s.corrected_value));
    report.max_rel_err_gap =
        std::max(report.max_rel_err_gap,
                 std::abs(s.observed_gap - s.predicted_gap) / std::abs(s.predicted_gap));
    report.min_rel_gap =
        std::min(report.min_rel_gap,
                 std::abs(s.closed_value - s.flawed_value) / std::abs(s.closed_value));
    report.samples.push_back(s);
  }
  report.confirms_correction = report.max_rel_err_corrected <= 1e-10 &&
                               report.max_rel_err_gap <= 1e-9 &&
                               report.min_rel_gap > 1e-3;
  return report;
}

}  // namespace gkosc
