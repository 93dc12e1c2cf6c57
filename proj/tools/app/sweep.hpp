#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <frbf/interpolate.hpp>
#include <frbf/nodes.hpp>

#include "config.hpp"

namespace frbf::app {

enum class RowStatus { ok, error };

struct SweepRow {
  double alpha = 0.0;
  RowStatus status = RowStatus::ok;
  /// Training-node RMSE (interpolation) or interior-node residual RMSE
  /// (collocation). NaN on error.
  double rmse = 0.0;
  /// cond(G_M) when preconditioned, else cond(G).
  double cond = 0.0;
  double cond_g = 0.0;
  /// Held-out grid RMSE of the same quantity as `rmse`.
  double rmse_heldout = 0.0;
  double boundary_rmse = 0.0;
  double moment_residual = 0.0;
  /// Chosen shift exponent; 0 without preconditioning.
  int n_shift = 0;
  int m = 0;
  std::string message;
  /// Kept for the weights and grid exports.
  std::optional<Interpolant> interpolant;
};

struct SkippedAlpha {
  double alpha = 0.0;
  std::string reason;
};

struct SweepTable {
  std::string config_hash;
  std::vector<SweepRow> rows;
  /// Collocation alphas rejected by the restrictions; not part of `rows`.
  std::vector<SkippedAlpha> skipped;
  NodeSet nodes;

  /// True when there is at least one row and every row failed.
  bool all_failed() const;
};

/// CPD order used by a sweep: config.m, else the bound over the admissible
/// alpha range of the frac mode.
int sweep_cpd_order(const ExperimentConfig& config);

Domain sweep_domain(const ExperimentConfig& config);

/// Nodes from config.nodes_in, or Halton interior plus boundary lattice.
NodeSet sweep_nodes(const ExperimentConfig& config);

/// One row per alpha, in alpha order. Every alpha is validated before any
/// solve; a violation throws (RestrictionError or ConfigError).
SweepTable run_interpolation_sweep(const ExperimentConfig& config);

/// Rows for the alphas admitted by the restrictions with the operator order
/// q; the rest are listed in `skipped`.
SweepTable run_collocation_sweep(const ExperimentConfig& config);

struct KernelTable {
  std::vector<double> r;
  std::vector<double> tps;
  std::vector<double> phi;
};

/// 256 samples r = i / 256, i = 1..256, of r^N log r and the configured
/// kernel at the single configured alpha.
KernelTable kernel_table(const ExperimentConfig& config);

struct CatalogEntry {
  Family family = Family::false_tps;
  double N = 0.0;
  double alpha = 0.0;
  double b = 1.0;
  double c0 = 0.0;
  FracMode frac_mode = FracMode::none;
  std::vector<MonomialTerm> terms;
  int cpd_order = 0;
  std::string error;
};

/// Every family at every configured alpha.
std::vector<CatalogEntry> kernel_catalog(const ExperimentConfig& config);

/// Uniform n^d grid over the closed domain.
Eigen::MatrixXd uniform_grid(const Domain& domain, int n);

}  // namespace frbf::app
