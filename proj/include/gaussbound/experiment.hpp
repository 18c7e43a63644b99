#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gaussbound/constants.hpp"
#include "gaussbound/interpolation.hpp"
#include "gaussbound/simplex.hpp"

namespace gaussbound {

/// Test function for a run: either explicit sites + coefficients, or a
/// seeded random combination (count sites drawn inside the run's simplex,
/// coefficients uniform in coefficient_range).
struct TestFunctionSpec {
  std::vector<Point> sites;
  Eigen::VectorXd coefficients;
  int count = 0;
  double coefficient_min = -1.0;
  double coefficient_max = 1.0;

  bool is_random() const { return sites.empty(); }
};

struct ExperimentConfig {
  int n = 1;
  double beta = 1.0;
  double b0 = 1.0;
  std::vector<double> deltas;
  std::optional<int> l_override;
  TestFunctionSpec test_function;
  std::optional<int> probe_degree;  ///< default 2l
  std::string output_path;
  std::uint64_t seed = 0;
  bool allow_inadmissible = false;  ///< CLI flag, not a config key
  bool refine_probe = false;        ///< CLI flag: double the probe degree
};

/// Parses and validates a config document; snake_case keys, unknown keys
/// rejected.
ExperimentConfig config_from_json(const nlohmann::ordered_json& j);
ExperimentConfig load_config(const std::string& path);

struct AdmissibilityRecord {
  double delta = 0.0;
  double delta0 = 0.0;
  int l = 0;
  bool delta_admissible = false;  ///< delta <= delta0
  bool l_in_window = false;       ///< b0/delta <= l <= 2 b0/delta
  double diam_q = 0.0;            ///< = delta * l / 2
  bool low_degree_warning = false;  ///< l < n-3 (odd n) or l < n-4 (even n)
};

struct ExperimentPlan {
  int l = 0;
  Simplex q;
  CenterGrid centers;  ///< degree l-1
  CenterGrid probe;
  AdmissibilityRecord admissibility;
};

/// Chooses l = ceil(b0/delta) (or the override), builds the regular simplex
/// of diameter delta*l/2 with its degree-(l-1) centers and the probe grid.
/// Inadmissible delta throws unless cfg.allow_inadmissible; l = 1 is a
/// degenerate-grid error either way.
ExperimentPlan plan_experiment(const ExperimentConfig& cfg, double delta);

/// Same, but with a caller-supplied simplex whose diameter must match
/// delta*l/2 within 1e-9 relative.
ExperimentPlan plan_experiment(const ExperimentConfig& cfg, double delta, Simplex q);

struct ExperimentReport {
  int n = 1;
  double beta = 1.0;
  double b0 = 1.0;
  double delta = 0.0;
  double delta0 = 0.0;
  int l = 0;
  int n_centers = 0;
  double diam_q = 0.0;
  double cond_2norm = 0.0;
  double norm_f = 0.0;
  double sup_error = 0.0;
  Point argmax;
  double bound_value = 0.0;
  double log10_legacy_bound = 0.0;
  double margin_ratio = 0.0;
  double wall_ms = 0.0;  ///< not emitted: reports must be byte-stable
  std::string status;    ///< "ok" | "failed-solve" | "inadmissible"
};

/// Fits the interpolant to f at the plan's centers, measures the sup error
/// over the probe grid and assembles the full report. A conditioning
/// failure yields status "failed-solve" instead of throwing.
ExperimentReport run_experiment(const ExperimentPlan& plan, const KernelCombination& f,
                                const ExperimentConfig& cfg);

/// Materializes the configured test function for one sweep entry
/// (deterministic in cfg.seed and the entry index).
KernelCombination make_test_function(const ExperimentConfig& cfg,
                                     const ExperimentPlan& plan,
                                     std::size_t delta_index);

/// Plans and runs every delta in the config; reports come back sorted by
/// (n, beta, b0, delta).
std::vector<ExperimentReport> run_sweep(const ExperimentConfig& cfg);

/// CSV with the fixed column set, 17 significant digits, LF endings.
void emit_csv(const std::vector<ExperimentReport>& reports, std::ostream& out);
/// JSON array mirroring the CSV fields (non-finite values become null).
void emit_json(const std::vector<ExperimentReport>& reports, std::ostream& out);

enum class VerifySuite { stirling, moment, lebesgue, constants, all };

/// One verification check: what was tested, whether it held, and whether
/// it was expected to hold. "Expected fail" rows document the places where
/// the stated inequalities are genuinely false (factorial envelopes at
/// small k, and the even-dimension moment bound at l+n = 8).
struct VerifyRow {
  std::string check;
  bool passed = false;
  bool expected_pass = true;
  bool matches() const { return passed == expected_pass; }
};

std::vector<VerifyRow> verify_lemma_suite(VerifySuite suite);

VerifySuite parse_suite(const std::string& name);

}  // namespace gaussbound
