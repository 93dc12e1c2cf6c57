#include "frbf/precond.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "frbf/errors.hpp"

namespace frbf {

double condition_number(const Eigen::MatrixXd& G) {
  if (G.rows() != G.cols() || G.size() == 0) {
    throw DimensionError("condition_number needs a non-empty square matrix");
  }
  if (!G.allFinite()) {
    throw DomainError("condition_number: matrix has non-finite entries");
  }
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(G);
  const auto& sigma = svd.singularValues();
  const double smax = sigma(0);
  const double smin = sigma(sigma.size() - 1);
  if (smax == 0.0 || smin <= smax * std::numeric_limits<double>::epsilon()) {
    return std::numeric_limits<double>::infinity();
  }
  return smax / smin;
}

PrecondResult precondition(const Eigen::MatrixXd& G, const Eigen::VectorXd& U,
                           const PrecondConfig& config) {
  if (G.rows() != G.cols() || G.rows() != U.size()) {
    throw DimensionError("precondition: G must be square and match U");
  }
  if (!(config.M > 1.0) || config.n_max < 1) {
    throw DomainError("precondition: needs M > 1 and n_max >= 1");
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  const Eigen::MatrixXd Q = qr.householderQ();
  const auto R = qr.matrixQR().triangularView<Eigen::Upper>();
  const Eigen::Index size = G.rows();

  if ((qr.matrixQR().diagonal().array() == 0.0).any()) {
    throw SingularError("precondition: R has a zero pivot, G is singular");
  }

  PrecondResult best;
  best.cond_before = condition_number(G);
  best.cond_after = std::numeric_limits<double>::infinity();
  bool any_factored = false;

  for (int n = 1; n <= config.n_max; ++n) {
    const double shift = std::ldexp(1.0, -n);
    const Eigen::MatrixXd H = Q.array() + shift;
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(H);
    // PartialPivLU does not report singularity; check the pivots.
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    if (pivots.minCoeff() <= pivots.maxCoeff() * size *
                                 std::numeric_limits<double>::epsilon()) {
      continue;
    }
    any_factored = true;
    Eigen::MatrixXd G_M = lu.solve(G);
    R.solveInPlace(G_M);
    const double cond = condition_number(G_M);
    if (cond <= config.M) {
      Eigen::VectorXd rhs = lu.solve(U);
      R.solveInPlace(rhs);
      best.G_M = std::move(G_M);
      best.transformed_rhs = std::move(rhs);
      best.n = n;
      best.cond_after = cond;
      return best;
    }
    if (cond < best.cond_after) {
      best.cond_after = cond;
      best.n = n;
    }
  }
  if (!any_factored) {
    throw SingularError("precondition: H R is singular for every shift");
  }
  throw NoShiftFoundError(
      fmt::format("precondition: no shift n <= {} reached cond <= {} (best n = "
                  "{}, cond = {:.6g})",
                  config.n_max, config.M, best.n, best.cond_after),
      best.n, best.cond_after);
}

}  // namespace frbf
