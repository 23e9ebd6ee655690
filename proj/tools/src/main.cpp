// Command-line front end for the gkosc library.
//
// Subcommands:
//   matel     one matrix element <m| x^-alpha |n> with diagnostics
//   table     the N x N matrix of elements
//   spectrum  Rayleigh-Ritz eigenvalues, optionally swept over basis size
//             or coupling strength
//   energies  unperturbed level energies E_n
//   verify    property suites with a machine-readable pass/fail report
//
// Output contract: CSV is UTF-8 with \n line endings, one header row, and
// %.17g numerics so every value round-trips to the same double. JSON is a
// single top-level object; it carries a "timestamp" key unless
// --no-timestamp is given. With --no-timestamp, identical flags produce
// byte-identical output.
//
// Exit codes: 0 success, 1 usage error, 2 domain or evaluation error,
// 3 verification suite failure.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gkosc/gk_basis.hpp"
#include "gkosc/matrix_elements.hpp"
#include "gkosc/oracle.hpp"
#include "gkosc/variational.hpp"
#include "gkosc/verify.hpp"

namespace {

using nlohmann::json;

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Flags shared by every subcommand that emits a file or stream.
struct OutputFlags {
  std::string format = "csv";
  std::string out_path;
  bool no_timestamp = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& of,
                      const std::string& default_format = "csv") {
  of.format = default_format;
  cmd->add_option("--format", of.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", of.out_path, "Write output to PATH instead of stdout");
  cmd->add_flag("--no-timestamp", of.no_timestamp,
                "Omit the timestamp key from JSON output");
}

void emit(const OutputFlags& of, const std::string& text) {
  if (of.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(of.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + of.out_path);
  f << text;
}

void emit_json(const OutputFlags& of, json j) {
  if (!of.no_timestamp) j["timestamp"] = iso_timestamp();
  emit(of, j.dump(2) + "\n");
}

// Potential parameters, either directly (--A/--B) or through the
// depth/length form (--V0/--a) that maps to A = V0 a^2, B = V0 / a^2.
struct ParamFlags {
  double A = 0.0;
  double B = 1.0;
  double V0 = 1.0;
  double a = 1.0;
  CLI::Option* v0_opt = nullptr;
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
  auto* A = cmd->add_option("--A", pf.A, "Inverse-square strength (A >= 0)")
                ->capture_default_str();
  auto* B = cmd->add_option("--B", pf.B, "Quadratic strength (B > 0)")
                ->capture_default_str();
  auto* V0 = cmd->add_option("--V0", pf.V0, "Well depth (alternative form)");
  auto* a = cmd->add_option("--a", pf.a, "Length scale (alternative form)");
  V0->needs(a)->excludes(A)->excludes(B);
  a->needs(V0)->excludes(A)->excludes(B);
  pf.v0_opt = V0;
}

gkosc::BasisParams make_params(const ParamFlags& pf) {
  if (pf.v0_opt != nullptr && pf.v0_opt->count() > 0) {
    return gkosc::BasisParams::from_goldman(pf.V0, pf.a);
  }
  return gkosc::BasisParams(pf.A, pf.B);
}

json params_json(const gkosc::BasisParams& p) {
  return json{{"A", p.A()}, {"B", p.B()}, {"gamma", p.gamma_p()}};
}

double eval_by_method(const std::string& method, const gkosc::MatElemQuery& q,
                      gkosc::CancellationDiag* diag) {
  if (method == "closed") return gkosc::matel_gk(q, diag);
  if (method == "termwise") return gkosc::matel_termwise(q);
  if (method == "quadrature") return gkosc::matel_quadrature(q);
  // "table": only the precomputed m, n <= 3 entries exist.
  return gkosc::explicit_table_eval(q.m, q.n, q.alpha, q.params);
}

gkosc::FillMethod fill_from_name(const std::string& method) {
  if (method == "termwise") return gkosc::FillMethod::kTermwise;
  if (method == "quadrature") return gkosc::FillMethod::kQuadrature;
  return gkosc::FillMethod::kClosed;
}

int run_matel(const ParamFlags& pf, const OutputFlags& of, int m, int n,
              double alpha, const std::string& method) {
  const gkosc::BasisParams p = make_params(pf);
  gkosc::CancellationDiag diag;
  diag.alpha_max = 2.0 * p.gamma_p();
  const double value = eval_by_method(method, {p, m, n, alpha}, &diag);
  if (of.format == "csv") {
    std::string text = "value,method,cancellation_ratio,low_confidence,alpha_max\n";
    text += num17(value) + "," + method + "," + num17(diag.cancellation_ratio) +
            "," + (diag.low_confidence ? "1" : "0") + "," +
            num17(diag.alpha_max) + "\n";
    emit(of, text);
  } else {
    json j;
    j["params"] = params_json(p);
    j["query"] = {{"m", m}, {"n", n}, {"alpha", alpha}, {"method", method}};
    j["result"] = value;
    j["diagnostics"] = {{"cancellation_ratio", diag.cancellation_ratio},
                        {"low_confidence", diag.low_confidence},
                        {"alpha_max", diag.alpha_max}};
    emit_json(of, std::move(j));
  }
  return 0;
}

int run_table(const ParamFlags& pf, const OutputFlags& of, int order,
              double alpha, const std::string& method) {
  const gkosc::BasisParams p = make_params(pf);
  std::vector<std::vector<double>> rows(order, std::vector<double>(order));
  gkosc::CancellationDiag worst;
  worst.alpha_max = 2.0 * p.gamma_p();
  for (int m = 0; m < order; ++m) {
    for (int n = 0; n < order; ++n) {
      gkosc::CancellationDiag diag;
      rows[m][n] = eval_by_method(method, {p, m, n, alpha}, &diag);
      if (diag.cancellation_ratio > worst.cancellation_ratio) worst = diag;
    }
  }
  if (of.format == "csv") {
    std::string text = "m,n,value\n";
    for (int m = 0; m < order; ++m) {
      for (int n = 0; n < order; ++n) {
        text += std::to_string(m) + "," + std::to_string(n) + "," +
                num17(rows[m][n]) + "\n";
      }
    }
    emit(of, text);
  } else {
    json j;
    j["params"] = params_json(p);
    j["query"] = {{"N", order}, {"alpha", alpha}, {"method", method}};
    j["rows"] = rows;
    j["diagnostics"] = {{"max_cancellation_ratio", worst.cancellation_ratio},
                        {"low_confidence", worst.low_confidence},
                        {"alpha_max", worst.alpha_max}};
    emit_json(of, std::move(j));
  }
  return 0;
}

int run_spectrum(const ParamFlags& pf, const OutputFlags& of, double alpha,
                 double lambda_c, int basis_size,
                 const std::vector<int>& sweep_sizes,
                 const std::vector<double>& sweep_lambdas,
                 const std::string& method, double tol) {
  const gkosc::BasisParams p = make_params(pf);
  const gkosc::FillMethod fill = fill_from_name(method);
  gkosc::JacobiOptions options;
  options.tol = tol;

  // Every mode reduces to a list of (label value, SpectrumResult).
  const bool by_size = !sweep_sizes.empty();
  std::vector<double> labels;
  std::vector<gkosc::SpectrumResult> results;
  if (by_size) {
    const auto sweep = gkosc::ground_state_sweep(p, alpha, lambda_c,
                                                 sweep_sizes, fill, options);
    for (size_t i = 0; i < sweep.size(); ++i) {
      labels.push_back(sweep_sizes[i]);
      results.push_back(sweep[i]);
    }
  } else if (!sweep_lambdas.empty()) {
    for (const double l : sweep_lambdas) {
      labels.push_back(l);
      results.push_back(gkosc::spectrum(p, alpha, l, basis_size, fill, options));
    }
  } else {
    labels.push_back(basis_size);
    results.push_back(
        gkosc::spectrum(p, alpha, lambda_c, basis_size, fill, options));
  }
  const bool label_is_size = by_size || sweep_lambdas.empty();
  const std::string label_key = label_is_size ? "N" : "lambda";

  if (of.format == "csv") {
    std::string text = label_key + ",k,eigenvalue\n";
    for (size_t i = 0; i < results.size(); ++i) {
      const auto& ev = results[i].eigenvalues;
      const size_t k_max = std::min<size_t>(ev.size(), 8);
      const std::string label = label_is_size
                                    ? std::to_string(static_cast<int>(labels[i]))
                                    : num17(labels[i]);
      for (size_t k = 0; k < k_max; ++k) {
        text += label + "," + std::to_string(k) + "," + num17(ev[k]) + "\n";
      }
    }
    emit(of, text);
  } else {
    json j;
    j["params"] = params_json(p);
    j["alpha"] = alpha;
    json rows = json::array();
    json residuals = json::array();
    for (size_t i = 0; i < results.size(); ++i) {
      const auto& ev = results[i].eigenvalues;
      const size_t k_max = std::min<size_t>(ev.size(), 8);
      json row;
      if (label_is_size) {
        row[label_key] = static_cast<int>(labels[i]);
      } else {
        row[label_key] = labels[i];
      }
      row["eigenvalues"] = std::vector<double>(ev.begin(), ev.begin() + k_max);
      rows.push_back(std::move(row));
      residuals.push_back(results[i].residual);
    }
    j["rows"] = std::move(rows);
    j["residuals"] = std::move(residuals);
    emit_json(of, std::move(j));
  }
  return 0;
}

int run_energies(const ParamFlags& pf, const OutputFlags& of, int count) {
  const gkosc::BasisParams p = make_params(pf);
  if (of.format == "csv") {
    std::string text = "n,energy\n";
    for (int n = 0; n < count; ++n) {
      text += std::to_string(n) + "," + num17(gkosc::energy(p, n)) + "\n";
    }
    emit(of, text);
  } else {
    json j;
    j["params"] = params_json(p);
    j["query"] = {{"N", count}};
    json rows = json::array();
    for (int n = 0; n < count; ++n) {
      rows.push_back({{"n", n}, {"energy", gkosc::energy(p, n)}});
    }
    j["rows"] = std::move(rows);
    emit_json(of, std::move(j));
  }
  return 0;
}

int run_verify(const OutputFlags& of, const std::string& suite) {
  const gkosc::verify::SuiteReport report = gkosc::verify::run_suite(suite);
  if (of.format == "csv") {
    std::string text = "suite,case,value,threshold,comparison,pass\n";
    for (const auto& c : report.cases) {
      text += report.suite + "," + c.name + "," + num17(c.value) + "," +
              num17(c.threshold) + "," + (c.at_least ? "at_least" : "at_most") +
              "," + (c.pass ? "1" : "0") + "\n";
    }
    emit(of, text);
  } else {
    json j;
    j["suite"] = report.suite;
    j["pass"] = report.pass;
    json cases = json::array();
    for (const auto& c : report.cases) {
      cases.push_back({{"name", c.name},
                       {"value", c.value},
                       {"threshold", c.threshold},
                       {"comparison", c.at_least ? "at_least" : "at_most"},
                       {"pass", c.pass}});
    }
    j["cases"] = std::move(cases);
    emit_json(of, std::move(j));
  }
  return report.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix elements, spectra, and checks for the spiked oscillator"
               " in the x^2 + A/x^2 eigenbasis"};
  app.require_subcommand(1);

  const std::vector<std::string> methods = {"closed", "termwise", "quadrature",
                                            "table"};
  const std::vector<std::string> fill_methods = {"closed", "termwise",
                                                 "quadrature"};

  // matel
  auto* matel = app.add_subcommand("matel", "One matrix element <m|x^-alpha|n>");
  ParamFlags matel_pf;
  OutputFlags matel_of;
  int matel_m = 0, matel_n = 0;
  double matel_alpha = 1.0;
  std::string matel_method = "closed";
  add_param_flags(matel, matel_pf);
  matel->add_option("--alpha", matel_alpha, "Exponent in x^-alpha")->required();
  matel->add_option("--m", matel_m, "Row index")->check(CLI::NonNegativeNumber);
  matel->add_option("--n", matel_n, "Column index")->check(CLI::NonNegativeNumber);
  matel->add_option("--method", matel_method, "Evaluation route")
      ->check(CLI::IsMember(methods))
      ->capture_default_str();
  add_output_flags(matel, matel_of);

  // table
  auto* table = app.add_subcommand("table", "N x N matrix of elements");
  ParamFlags table_pf;
  OutputFlags table_of;
  int table_order = 4;
  double table_alpha = 1.0;
  std::string table_method = "closed";
  add_param_flags(table, table_pf);
  table->add_option("--alpha", table_alpha, "Exponent in x^-alpha")->required();
  table->add_option("--N", table_order, "Matrix order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table->add_option("--method", table_method, "Evaluation route")
      ->check(CLI::IsMember(methods))
      ->capture_default_str();
  add_output_flags(table, table_of);

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "Rayleigh-Ritz eigenvalues of the perturbed Hamiltonian");
  ParamFlags spec_pf;
  OutputFlags spec_of;
  double spec_alpha = 1.0, spec_lambda = 0.0, spec_tol = 1e-12;
  int spec_size = 16;
  std::vector<int> spec_sweep_sizes;
  std::vector<double> spec_sweep_lambdas;
  std::string spec_method = "closed";
  add_param_flags(spectrum, spec_pf);
  spectrum->add_option("--alpha", spec_alpha, "Exponent in x^-alpha")->required();
  spectrum->add_option("--lambda", spec_lambda, "Coupling strength (>= 0)")
      ->capture_default_str();
  spectrum->add_option("--N", spec_size, "Basis size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* sweep_n = spectrum
                      ->add_option("--sweep-N", spec_sweep_sizes,
                                   "Ascending basis sizes to sweep")
                      ->delimiter(',');
  auto* sweep_l = spectrum
                      ->add_option("--sweep-lambda", spec_sweep_lambdas,
                                   "Coupling strengths to sweep")
                      ->delimiter(',');
  sweep_n->excludes(sweep_l);
  sweep_l->excludes(sweep_n);
  spectrum->add_option("--method", spec_method, "Matrix fill route")
      ->check(CLI::IsMember(fill_methods))
      ->capture_default_str();
  spectrum->add_option("--tol", spec_tol, "Eigensolver off-diagonal tolerance")
      ->capture_default_str();
  add_output_flags(spectrum, spec_of, "json");

  // energies
  auto* energies =
      app.add_subcommand("energies", "Unperturbed level energies E_n");
  ParamFlags en_pf;
  OutputFlags en_of;
  int en_count = 8;
  add_param_flags(energies, en_pf);
  energies->add_option("--N", en_count, "Number of levels (n = 0 .. N-1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flags(energies, en_of);

  // verify
  auto* verify = app.add_subcommand("verify", "Run one property suite");
  OutputFlags ver_of;
  std::string ver_suite;
  verify->add_option("--suite", ver_suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(gkosc::verify::suite_names()));
  add_output_flags(verify, ver_of, "json");

  int rc = 0;
  matel->callback([&] {
    rc = run_matel(matel_pf, matel_of, matel_m, matel_n, matel_alpha,
                   matel_method);
  });
  table->callback(
      [&] { rc = run_table(table_pf, table_of, table_order, table_alpha,
                           table_method); });
  spectrum->callback([&] {
    rc = run_spectrum(spec_pf, spec_of, spec_alpha, spec_lambda, spec_size,
                      spec_sweep_sizes, spec_sweep_lambdas, spec_method,
                      spec_tol);
  });
  energies->callback([&] { rc = run_energies(en_pf, en_of, en_count); });
  verify->callback([&] { rc = run_verify(ver_of, ver_suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
