#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaussbound/constants.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/experiment.hpp"

namespace {

using gaussbound::BoundComparison;
using gaussbound::TheoremConstants;
using nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_constants(int n, double beta, double b0, bool as_json) {
  const TheoremConstants tc = gaussbound::theorem_constants(n, beta, b0);
  const gaussbound::LegacyConstants lc = gaussbound::legacy_constants(n, beta, b0);
  if (as_json) {
    ordered_json j;
    j["n"] = tc.n;
    j["beta"] = tc.beta;
    j["b0"] = tc.b0;
    j["rho3"] = tc.rho3.value();
    j["alpha_n"] = tc.alpha_n.value();
    j["delta_dprime"] = tc.delta_dprime.value();
    j["delta0"] = tc.delta0;
    j["c1"] = tc.c1.value();
    j["c2"] = tc.c2.value();
    j["c3"] = tc.c3_value;
    j["log_c2"] = tc.c2.log();
    j["gamma_n"] = lc.gamma_n.str();
    j["log_a2"] = lc.a2.log();
    j["a3"] = lc.a3;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n            = " << tc.n << '\n'
              << "beta         = " << fmt17(tc.beta) << '\n'
              << "b0           = " << fmt17(tc.b0) << '\n'
              << "rho3         = " << fmt17(tc.rho3.value()) << '\n'
              << "alpha_n      = " << fmt17(tc.alpha_n.value()) << '\n'
              << "delta_dprime = " << fmt17(tc.delta_dprime.value()) << '\n'
              << "delta0       = " << fmt17(tc.delta0) << '\n'
              << "c1           = " << fmt17(tc.c1.value()) << '\n'
              << "c2           = " << fmt17(tc.c2.value()) << '\n'
              << "c3           = " << fmt17(tc.c3_value) << '\n'
              << "log_c2       = " << fmt17(tc.c2.log()) << '\n'
              << "gamma_n      = " << lc.gamma_n.str() << '\n'
              << "log_a2       = " << fmt17(lc.a2.log()) << '\n'
              << "a3           = " << fmt17(lc.a3) << '\n';
  }
  return 0;
}

int cmd_bound(int n, double beta, double b0, double delta, double norm) {
  const TheoremConstants tc = gaussbound::theorem_constants(n, beta, b0);
  std::cout << fmt17(gaussbound::bound_value(tc, delta, norm)) << '\n';
  return 0;
}

int cmd_compare(int n_max, double beta, double b0, const std::string& out_path) {
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gaussbound::ConfigError("cannot open output file '" + out_path + "'");
  out << "n,beta,b0,log10_c2,log10_a2,c3,a3,log10_a2_over_c2,c3_over_a3,"
         "improvement,a1_note\n";
  const double ln10 = std::log(10.0);
  for (int n = 1; n <= n_max; ++n) {
    const BoundComparison cmp = gaussbound::compare_bounds(n, beta, b0);
    out << cmp.n << ',' << fmt17(cmp.beta) << ',' << fmt17(cmp.b0) << ','
        << fmt17(cmp.log_c2 / ln10) << ',' << fmt17(cmp.log_a2 / ln10) << ','
        << fmt17(cmp.c3) << ',' << fmt17(cmp.a3) << ','
        << fmt17(cmp.log_ratio_a2_c2 / ln10) << ',' << fmt17(cmp.c3_over_a3) << ','
        << (cmp.improvement ? "true" : "false") << ",a1=c1-assumed\n";
  }
  std::cerr << "wrote comparison for n = 1.." << n_max << " to " << out_path << '\n';
  return 0;
}

int cmd_verify(const std::string& suite_name) {
  const auto rows = gaussbound::verify_lemma_suite(gaussbound::parse_suite(suite_name));
  int mismatches = 0;
  for (const auto& row : rows) {
    const char* status = row.passed ? "pass" : "fail";
    const char* expected = row.expected_pass ? "pass" : "fail";
    const bool ok = row.matches();
    if (!ok) ++mismatches;
    std::cout << (ok ? "ok      " : "MISMATCH") << "  " << status << " (expected "
              << expected << ")  " << row.check << '\n';
  }
  std::cout << rows.size() << " checks, " << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 3;
}

int cmd_experiment(const std::string& config_path, std::optional<std::string> out_path,
                   const std::string& format, bool allow_inadmissible,
                   bool refine_probe) {
  gaussbound::ExperimentConfig cfg = gaussbound::load_config(config_path);
  cfg.allow_inadmissible = allow_inadmissible;
  cfg.refine_probe = refine_probe;

  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = gaussbound::run_sweep(cfg);
  const double total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();

  const std::string path = out_path.value_or(cfg.output_path);
  auto write = [&](std::ostream& os) {
    if (format == "json")
      gaussbound::emit_json(reports, os);
    else
      gaussbound::emit_csv(reports, os);
  };
  if (path.empty()) {
    write(std::cout);
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gaussbound::ConfigError("cannot open output file '" + path + "'");
    write(out);
    std::cerr << "wrote " << reports.size() << " report(s) to " << path << '\n';
  }
  std::cerr << "total wall time " << total_ms << " ms\n";

  for (const auto& r : reports)
    if (r.status == "failed-solve") return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian kernel interpolation error bounds: constants, lemma "
               "verification, and desk-scale experiments"};
  app.require_subcommand(1);

  int n = 1, n_max = 5;
  double beta = 1.0, b0 = 1.0, delta = 0.0, norm = 1.0;
  bool as_json = false, allow_inadmissible = false, refine_probe = false;
  std::string out_path, suite = "all", config_path, format = "csv";

  auto* c_constants = app.add_subcommand("constants", "print the bound constants");
  c_constants->add_option("--n", n, "dimension")->required();
  c_constants->add_option("--beta", beta, "kernel shape parameter")->required();
  c_constants->add_option("--b0", b0, "geometry parameter")->required();
  c_constants->add_flag("--json", as_json, "emit JSON");

  auto* c_bound = app.add_subcommand("bound", "evaluate the error bound");
  c_bound->add_option("--n", n)->required();
  c_bound->add_option("--beta", beta)->required();
  c_bound->add_option("--b0", b0)->required();
  c_bound->add_option("--delta", delta, "spacing parameter, 0 < delta <= delta0")->required();
  c_bound->add_option("--norm", norm, "native-space norm of f")->required();

  auto* c_compare = app.add_subcommand("compare", "dimension sweep old vs new constants");
  c_compare->add_option("--n-max", n_max)->required();
  c_compare->add_option("--beta", beta)->required();
  c_compare->add_option("--b0", b0)->required();
  c_compare->add_option("--out", out_path, "output CSV path")->required();

  auto* c_verify = app.add_subcommand("verify", "run a lemma verification suite");
  c_verify->add_option("--suite", suite, "stirling|moment|lebesgue|constants|all")
      ->required();

  auto* c_experiment = app.add_subcommand("experiment", "run a configured experiment");
  c_experiment->add_option("--config", config_path, "JSON config file")->required();
  std::string exp_out;
  c_experiment->add_option("--out", exp_out, "output path (overrides config)");
  c_experiment->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  c_experiment->add_flag("--allow-inadmissible", allow_inadmissible,
                         "run deltas beyond delta0; bound columns become n/a");
  c_experiment->add_flag("--refine-probe", refine_probe,
                         "double the probe grid degree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_constants->parsed()) return cmd_constants(n, beta, b0, as_json);
    if (c_bound->parsed()) return cmd_bound(n, beta, b0, delta, norm);
    if (c_compare->parsed()) return cmd_compare(n_max, beta, b0, out_path);
    if (c_verify->parsed()) return cmd_verify(suite);
    if (c_experiment->parsed())
      return cmd_experiment(config_path,
                            exp_out.empty() ? std::nullopt
                                            : std::optional<std::string>(exp_out),
                            format, allow_inadmissible, refine_probe);
  } catch (const gaussbound::AdmissibilityError& e) {
    std::cerr << "admissibility error: " << e.what() << '\n';
    return 1;
  } catch (const gaussbound::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const gaussbound::ConditioningError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  } catch (const gaussbound::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
