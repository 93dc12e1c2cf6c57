#pragma once

#include <Eigen/Dense>

namespace frbf {

struct PrecondConfig {
  /// Target bound on cond(G_M).
  double M = 10.0;
  /// Largest shift exponent tried.
  int n_max = 64;
};

struct PrecondResult {
  Eigen::MatrixXd G_M;
  Eigen::VectorXd transformed_rhs;
  int n = 0;
  double cond_before = 0.0;
  double cond_after = 0.0;
};

/// 2-norm condition number sigma_max / sigma_min. Returns +infinity when
/// sigma_min vanishes to machine precision.
double condition_number(const Eigen::MatrixXd& G);

/// QR-shift preconditioner. Factors G = Q R once (unpivoted Householder),
/// then for n = 1, 2, ..., n_max sets H = Q + 2^-n (every entry) and forms
///   G_M = (H R)^{-1} G,   rhs = (H R)^{-1} U
/// by solving against the factors of H and R. Returns the first n with
/// cond(G_M) <= M.
///
/// Throws NoShiftFoundError (with the best n and cond seen) when no n works
/// and SingularError when H R is singular for every n.
PrecondResult precondition(const Eigen::MatrixXd& G, const Eigen::VectorXd& U,
                           const PrecondConfig& config = {});

}  // namespace frbf
