#include "gaussbound/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gaussbound/errors.hpp"
#include "gaussbound/rng.hpp"

namespace gaussbound {

namespace {

using nlohmann::ordered_json;

constexpr double kQuietNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double json_number(const ordered_json& j, const std::string& key) {
  if (!j.at(key).is_number())
    throw ConfigError("config key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

void reject_unknown_keys(const ordered_json& j, const std::vector<std::string>& known,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ConfigError("unknown " + where + " key '" + it.key() + "'");
}

int low_degree_threshold(int n) { return n % 2 == 1 ? n - 3 : n - 4; }

}  // namespace

ExperimentConfig config_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(j,
                      {"n", "beta", "b0", "delta", "l_override", "test_function",
                       "probe_degree", "output_path", "seed"},
                      "config");

  ExperimentConfig cfg;
  try {
    cfg.n = j.at("n").get<int>();
    cfg.beta = json_number(j, "beta");
    cfg.b0 = json_number(j, "b0");

    const ordered_json& d = j.at("delta");
    if (d.is_array()) {
      for (const auto& v : d) cfg.deltas.push_back(v.get<double>());
    } else if (d.is_number()) {
      cfg.deltas.push_back(d.get<double>());
    } else {
      throw ConfigError("'delta' must be a number or an array of numbers");
    }

    if (j.contains("l_override")) cfg.l_override = j.at("l_override").get<int>();
    if (j.contains("probe_degree")) cfg.probe_degree = j.at("probe_degree").get<int>();
    if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();

    const ordered_json& tf = j.at("test_function");
    if (!tf.is_object()) throw ConfigError("'test_function' must be an object");
    reject_unknown_keys(tf, {"sites", "coefficients", "count", "coefficient_range"},
                        "test_function");
    if (tf.contains("sites") != tf.contains("coefficients"))
      throw ConfigError("'sites' and 'coefficients' must appear together");
    if (tf.contains("sites") == tf.contains("count"))
      throw ConfigError(
          "test_function needs either sites+coefficients or count (+range)");
    if (tf.contains("sites")) {
      for (const auto& site : tf.at("sites")) {
        Point p(site.size());
        for (std::size_t i = 0; i < site.size(); ++i) p[static_cast<int>(i)] = site[i].get<double>();
        cfg.test_function.sites.push_back(std::move(p));
      }
      const auto& coefs = tf.at("coefficients");
      cfg.test_function.coefficients.resize(static_cast<Eigen::Index>(coefs.size()));
      for (std::size_t i = 0; i < coefs.size(); ++i)
        cfg.test_function.coefficients[static_cast<Eigen::Index>(i)] = coefs[i].get<double>();
    } else {
      cfg.test_function.count = tf.at("count").get<int>();
      if (tf.contains("coefficient_range")) {
        const auto& r = tf.at("coefficient_range");
        if (!r.is_array() || r.size() != 2)
          throw ConfigError("'coefficient_range' must be [lo, hi]");
        cfg.test_function.coefficient_min = r[0].get<double>();
        cfg.test_function.coefficient_max = r[1].get<double>();
      }
    }
  } catch (const ordered_json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  if (cfg.n < 1) throw ConfigError("n must be >= 1");
  if (!(cfg.beta > 0.0)) throw ConfigError("beta must be positive");
  if (!(cfg.b0 > 0.0)) throw ConfigError("b0 must be positive");
  if (cfg.deltas.empty()) throw ConfigError("at least one delta is required");
  for (double d : cfg.deltas)
    if (!(d > 0.0)) throw ConfigError("every delta must be positive");
  if (cfg.probe_degree && *cfg.probe_degree < 1)
    throw ConfigError("probe_degree must be >= 1");
  if (cfg.test_function.is_random()) {
    if (cfg.test_function.count < 1)
      throw ConfigError("random test function needs count >= 1");
    if (!(cfg.test_function.coefficient_min < cfg.test_function.coefficient_max))
      throw ConfigError("coefficient_range must satisfy lo < hi");
  } else {
    if (cfg.test_function.coefficients.size() !=
        static_cast<Eigen::Index>(cfg.test_function.sites.size()))
      throw ConfigError("sites and coefficients must have equal length");
    for (const Point& p : cfg.test_function.sites)
      if (p.size() != cfg.n)
        throw ConfigError("every site must have dimension n = " + std::to_string(cfg.n));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const ordered_json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

namespace {

int choose_l(const ExperimentConfig& cfg, double delta) {
  const double ratio = cfg.b0 / delta;
  int l;
  if (cfg.l_override) {
    l = *cfg.l_override;
  } else {
    // Guard the ceiling against FP dirt so exact ratios (0.05/0.01 = 5)
    // pick the mathematical value.
    l = static_cast<int>(std::ceil(ratio - 1e-9 * std::max(1.0, ratio)));
  }
  const bool in_window =
      l >= ratio * (1.0 - 1e-9) && l <= 2.0 * ratio * (1.0 + 1e-9);
  if (cfg.l_override && !in_window)
    throw ConfigError("l_override " + std::to_string(l) + " outside the window [" +
                      std::to_string(ratio) + ", " + std::to_string(2.0 * ratio) + "]");
  return l;
}

ExperimentPlan build_plan(const ExperimentConfig& cfg, double delta, int l, Simplex q) {
  const TheoremConstants tc = theorem_constants(cfg.n, cfg.beta, cfg.b0);

  if (l - 1 < 1)
    throw GeometryError(
        "degenerate grid: l = " + std::to_string(l) +
        " gives degree-0 centers; pick a smaller delta relative to b0");

  int probe_degree = cfg.probe_degree.value_or(2 * l);
  if (cfg.refine_probe) probe_degree *= 2;

  AdmissibilityRecord adm;
  adm.delta = delta;
  adm.delta0 = tc.delta0;
  adm.l = l;
  adm.delta_admissible = delta <= tc.delta0;
  const double ratio = cfg.b0 / delta;
  adm.l_in_window = l >= ratio * (1.0 - 1e-9) && l <= 2.0 * ratio * (1.0 + 1e-9);
  adm.diam_q = q.diameter();
  adm.low_degree_warning = l < low_degree_threshold(cfg.n);

  CenterGrid centers(q, l - 1);
  CenterGrid probe(q, probe_degree);
  return ExperimentPlan{l, std::move(q), std::move(centers), std::move(probe), adm};
}

}  // namespace

ExperimentPlan plan_experiment(const ExperimentConfig& cfg, double delta) {
  const TheoremConstants tc = theorem_constants(cfg.n, cfg.beta, cfg.b0);
  if (delta > tc.delta0 && !cfg.allow_inadmissible)
    throw AdmissibilityError("delta " + std::to_string(delta) + " exceeds delta0 " +
                                 std::to_string(tc.delta0),
                             delta, tc.delta0);
  if (!(delta > 0.0)) throw ConfigError("delta must be positive");
  const int l = choose_l(cfg, delta);
  return build_plan(cfg, delta, l, Simplex::regular(cfg.n, delta * l / 2.0));
}

ExperimentPlan plan_experiment(const ExperimentConfig& cfg, double delta, Simplex q) {
  const TheoremConstants tc = theorem_constants(cfg.n, cfg.beta, cfg.b0);
  if (delta > tc.delta0 && !cfg.allow_inadmissible)
    throw AdmissibilityError("delta " + std::to_string(delta) + " exceeds delta0 " +
                                 std::to_string(tc.delta0),
                             delta, tc.delta0);
  if (!(delta > 0.0)) throw ConfigError("delta must be positive");
  const int l = choose_l(cfg, delta);
  const double want = delta * l / 2.0;
  if (std::abs(q.diameter() - want) > 1e-9 * want)
    throw GeometryError("supplied simplex diameter " + std::to_string(q.diameter()) +
                        " does not match delta*l/2 = " + std::to_string(want));
  return build_plan(cfg, delta, l, std::move(q));
}

KernelCombination make_test_function(const ExperimentConfig& cfg,
                                     const ExperimentPlan& plan,
                                     std::size_t delta_index) {
  KernelCombination f;
  f.kernel = GaussianKernel{cfg.beta};
  if (!cfg.test_function.is_random()) {
    f.sites = cfg.test_function.sites;
    f.coefficients = cfg.test_function.coefficients;
    return f;
  }

  std::mt19937_64 rng(cfg.seed + 0x9E3779B97F4A7C15ULL * (delta_index + 1));
  const double min_sep = 1e-9 * plan.q.diameter();
  while (static_cast<int>(f.sites.size()) < cfg.test_function.count) {
    Point p = sample_point_in_simplex(rng, plan.q);
    bool clear = true;
    for (const Point& other : f.sites)
      if ((p - other).norm() < min_sep) clear = false;
    if (clear) f.sites.push_back(std::move(p));
  }
  f.coefficients.resize(cfg.test_function.count);
  for (int i = 0; i < cfg.test_function.count; ++i)
    f.coefficients[i] = uniform(rng, cfg.test_function.coefficient_min,
                                cfg.test_function.coefficient_max);
  return f;
}

ExperimentReport run_experiment(const ExperimentPlan& plan, const KernelCombination& f,
                                const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const TheoremConstants tc = theorem_constants(cfg.n, cfg.beta, cfg.b0);
  const LegacyConstants lc = legacy_constants(cfg.n, cfg.beta, cfg.b0);

  ExperimentReport rep;
  rep.n = cfg.n;
  rep.beta = cfg.beta;
  rep.b0 = cfg.b0;
  rep.delta = plan.admissibility.delta;
  rep.delta0 = plan.admissibility.delta0;
  rep.l = plan.l;
  rep.n_centers = static_cast<int>(plan.centers.size());
  rep.diam_q = plan.admissibility.diam_q;

  rep.norm_f = native_norm(f);

  const bool admissible = plan.admissibility.delta_admissible;
  if (admissible) {
    rep.bound_value = bound_value(tc, rep.delta, rep.norm_f);
    rep.log10_legacy_bound =
        legacy_bound_log(lc, rep.delta, rep.norm_f).log_abs() / std::log(10.0);
  } else {
    // Theorem does not apply; bound columns are not-applicable.
    rep.bound_value = kQuietNan;
    rep.log10_legacy_bound = kQuietNan;
  }

  Eigen::VectorXd values(static_cast<Eigen::Index>(plan.centers.size()));
  for (std::size_t j = 0; j < plan.centers.size(); ++j)
    values[static_cast<Eigen::Index>(j)] = f.evaluate(plan.centers.points()[j]);

  try {
    const Interpolant s = fit_interpolant(f.kernel, plan.centers.points(), values);
    rep.cond_2norm = s.diagnostics().condition_2norm;
    const SupError sup = sup_error_on_grid(f, s, plan.probe);
    rep.sup_error = sup.value;
    rep.argmax = sup.argmax;
    if (!admissible) {
      rep.margin_ratio = kQuietNan;
    } else if (rep.bound_value > 0.0) {
      rep.margin_ratio = rep.sup_error / rep.bound_value;
    } else {
      rep.margin_ratio = rep.sup_error == 0.0
                             ? 0.0
                             : std::numeric_limits<double>::infinity();
    }
    rep.status = admissible ? "ok" : "inadmissible";
  } catch (const ConditioningError& e) {
    rep.cond_2norm = e.condition_estimate();
    rep.sup_error = kQuietNan;
    rep.margin_ratio = kQuietNan;
    rep.status = "failed-solve";
  }

  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

std::vector<ExperimentReport> run_sweep(const ExperimentConfig& cfg) {
  // Validate admissibility of the whole sweep up front in strict mode.
  const TheoremConstants tc = theorem_constants(cfg.n, cfg.beta, cfg.b0);
  if (!cfg.allow_inadmissible)
    for (double d : cfg.deltas)
      if (d > tc.delta0)
        throw AdmissibilityError("sweep delta " + std::to_string(d) +
                                     " exceeds delta0 " + std::to_string(tc.delta0),
                                 d, tc.delta0);

  std::vector<ExperimentReport> reports;
  reports.reserve(cfg.deltas.size());
  for (std::size_t i = 0; i < cfg.deltas.size(); ++i) {
    ExperimentPlan plan = plan_experiment(cfg, cfg.deltas[i]);
    const KernelCombination f = make_test_function(cfg, plan, i);
    reports.push_back(run_experiment(plan, f, cfg));
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const ExperimentReport& a, const ExperimentReport& b) {
                     return std::tie(a.n, a.beta, a.b0, a.delta) <
                            std::tie(b.n, b.beta, b.b0, b.delta);
                   });
  return reports;
}

void emit_csv(const std::vector<ExperimentReport>& reports, std::ostream& out) {
  out << "n,beta,b0,delta,delta0,l,n_centers,diam_q,cond_2norm,norm_f,"
         "sup_error,bound_value,log10_legacy_bound,margin_ratio,status\n";
  for (const ExperimentReport& r : reports) {
    out << r.n << ',' << fmt17(r.beta) << ',' << fmt17(r.b0) << ',' << fmt17(r.delta)
        << ',' << fmt17(r.delta0) << ',' << r.l << ',' << r.n_centers << ','
        << fmt17(r.diam_q) << ',' << fmt17(r.cond_2norm) << ',' << fmt17(r.norm_f)
        << ',' << fmt17(r.sup_error) << ',' << fmt17(r.bound_value) << ','
        << fmt17(r.log10_legacy_bound) << ',' << fmt17(r.margin_ratio) << ','
        << r.status << '\n';
  }
}

void emit_json(const std::vector<ExperimentReport>& reports, std::ostream& out) {
  ordered_json arr = ordered_json::array();
  for (const ExperimentReport& r : reports) {
    ordered_json row;
    row["n"] = r.n;
    row["beta"] = r.beta;
    row["b0"] = r.b0;
    row["delta"] = r.delta;
    row["delta0"] = r.delta0;
    row["l"] = r.l;
    row["n_centers"] = r.n_centers;
    row["diam_q"] = r.diam_q;
    row["cond_2norm"] = r.cond_2norm;
    row["norm_f"] = r.norm_f;
    row["sup_error"] = r.sup_error;
    row["bound_value"] = r.bound_value;
    row["log10_legacy_bound"] = r.log10_legacy_bound;
    row["margin_ratio"] = r.margin_ratio;
    row["status"] = r.status;
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << '\n';
}

namespace {

// Inequality x <= y in log space with the numerical guard.
bool holds_leq(double x_log, double y_log) { return x_log <= y_log + 1e-12; }

void stirling_rows(std::vector<VerifyRow>& rows) {
  for (int k = 1; k <= 170; ++k) {
    const double exact = log_big(factorial_exact(k));
    const StirlingEnvelope env = stirling_envelope(k);
    const FactorialBound fb = factorial_bound_22(k);
    rows.push_back({"stirling lower k=" + std::to_string(k),
                    holds_leq(env.lower_log, exact), true});
    rows.push_back({"stirling upper k=" + std::to_string(k),
                    holds_leq(exact, env.upper_log), !(k == 2 || k == 3)});
    rows.push_back({"factorial bound k=" + std::to_string(k),
                    holds_leq(exact, fb.bound_log), k != 3});
  }
}

void moment_rows(std::vector<VerifyRow>& rows) {
  for (int n = 1; n <= 6; ++n)
    for (int l = 2; l <= 40; l += 2)
      for (double beta : {0.1, 1.0, 4.0}) {
        // The even-dimension bound formula is genuinely exceeded when
        // l + n = 8 (the k = 3 factorial-bound failure propagates).
        const bool expected = !(n % 2 == 0 && l + n == 8);
        std::ostringstream name;
        name << "moment n=" << n << " l=" << l << " beta=" << beta;
        rows.push_back({name.str(),
                        holds_leq(moment_exact_log(n, l, beta),
                                  moment_upper_bound_log(n, l, beta)),
                        expected});
      }
}

void lebesgue_rows(std::vector<VerifyRow>& rows) {
  std::mt19937_64 rng(20240611u);
  for (int n = 1; n <= 3; ++n) {
    const Simplex s = Simplex::regular(n, 1.0);
    for (int d = 1; d <= 5; ++d) {
      const CenterGrid grid(s, d);
      const double cap = lebesgue_bound(d).value() * (1.0 + 1e-9);
      bool ok = true;
      for (int trial = 0; trial < 100; ++trial) {
        const Point x = sample_point_in_simplex(rng, s);
        if (reproduction_weights(grid, x).l1_norm > cap) ok = false;
      }
      rows.push_back({"lebesgue n=" + std::to_string(n) + " d=" + std::to_string(d),
                      ok, true});
    }
  }
  // Classical value: 3 uniform nodes on an interval peak at 1.25.
  const Simplex interval = Simplex::regular(1, 1.0);
  const CenterGrid grid(interval, 2);
  double max_l1 = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    Point x(1);
    x[0] = static_cast<double>(i) / 1000.0;
    max_l1 = std::max(max_l1, reproduction_weights(grid, x).l1_norm);
  }
  rows.push_back({"lebesgue 1d d=2 scan max = 1.25", std::abs(max_l1 - 1.25) <= 1e-6, true});
}

void constants_rows(std::vector<VerifyRow>& rows) {
  std::mt19937_64 rng(715517u);
  bool delta0_ok = true;
  bool c3_ok = true;
  for (int i = 0; i < 1000; ++i) {
    const double beta = uniform(rng, 0.05, 8.0);
    const double b0 = uniform(rng, 0.01, 4.0);
    const TheoremConstants tc = theorem_constants(1, beta, b0);
    if (!(tc.delta0 * tc.c2.value() <= 1.0 + 1e-12)) delta0_ok = false;
    if (tc.c3_value != b0 / 4.0) c3_ok = false;
  }
  rows.push_back({"delta0 * c2 <= 1 (1000 random beta, b0)", delta0_ok, true});
  rows.push_back({"c3 == b0/4 exactly (1000 random beta, b0)", c3_ok, true});

  const TheoremConstants tc1 = theorem_constants(1, 1.0, 1.0);
  rows.push_back({"rho1 < rho2 < 1",
                  tc1.rho1.log() < tc1.rho2.log() && tc1.rho2.log() < 0.0, true});

  bool dim_independent = true;
  for (int n = 2; n <= 10; ++n) {
    const TheoremConstants tcn = theorem_constants(n, 1.0, 1.0);
    if (tcn.c2.log() != tc1.c2.log() || tcn.c3_value != tc1.c3_value ||
        tcn.delta0 != tc1.delta0)
      dim_independent = false;
  }
  rows.push_back({"c2, c3, delta0 bit-identical for n=1..10", dim_independent, true});

  bool improvement = true;
  bool ratio_ok = true;
  for (int n = 1; n <= 10; ++n)
    for (double beta : {0.1, 1.0})
      for (double b0 : {0.05, 1.0}) {
        const BoundComparison cmp = compare_bounds(n, beta, b0);
        if (!cmp.improvement) improvement = false;
        if (cmp.c3_over_a3 != 2.0 * static_cast<double>(gamma_sequence(n)))
          ratio_ok = false;
      }
  rows.push_back({"improvement: log a2 > log c2 and c3 > a3 (n=1..10 grid)",
                  improvement, true});
  rows.push_back({"c3/a3 == 2 gamma_n (n=1..10 grid)", ratio_ok, true});
}

}  // namespace

std::vector<VerifyRow> verify_lemma_suite(VerifySuite suite) {
  std::vector<VerifyRow> rows;
  if (suite == VerifySuite::stirling || suite == VerifySuite::all) stirling_rows(rows);
  if (suite == VerifySuite::moment || suite == VerifySuite::all) moment_rows(rows);
  if (suite == VerifySuite::lebesgue || suite == VerifySuite::all) lebesgue_rows(rows);
  if (suite == VerifySuite::constants || suite == VerifySuite::all) constants_rows(rows);
  return rows;
}

VerifySuite parse_suite(const std::string& name) {
  if (name == "stirling") return VerifySuite::stirling;
  if (name == "moment") return VerifySuite::moment;
  if (name == "lebesgue") return VerifySuite::lebesgue;
  if (name == "constants") return VerifySuite::constants;
  if (name == "all") return VerifySuite::all;
  throw ConfigError("unknown verify suite '" + name +
                    "' (expected stirling|moment|lebesgue|constants|all)");
}

}  // namespace gaussbound
