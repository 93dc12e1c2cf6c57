#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "frbf/catalog.hpp"
#include "frbf/interpolate.hpp"
#include "frbf/monomial_sum.hpp"
#include "frbf/nodes.hpp"
#include "frbf/precond.hpp"
#include "frbf/specfun.hpp"

namespace frbf {

/// Radial operator acting on a profile u(r):
///   L u = D^{2+beta} u + (1/r) D^{1+beta} u + beta * r * u
/// with D the Caputo or Riemann-Liouville derivative (lower limit 0). For
/// beta -> 0 in two dimensions this is the radial Laplacian.
struct RadialOperator {
  double beta = 0.0;
  DerivativeKind kind = DerivativeKind::caputo;

  /// 2 + beta when positive, else 0.
  double order() const noexcept;
};

struct OperatorOrders {
  double q = 0.0;
  /// Offset of the radial tail powers.
  double o = 0.0;
};

/// q = max(ord L, ord B) with B the identity; o = q - 1 for q > 0, else 0.
OperatorOrders operator_orders(const RadialOperator& op);

/// Termwise image of a monomial sum. A constant term is annihilated by the
/// Caputo derivatives of positive order.
MonomialSum apply_operator(const RadialOperator& op, const MonomialSum& f);

/// L u = f on the interior nodes, u = g on the boundary nodes.
struct CollocationProblem {
  Domain domain;
  NodeSet nodes;
  RadialOperator op;
  ScalarField f;
  ScalarField g;
};

struct CollocationSystem {
  SaddleSystem system;
  MonomialSum l_kernel;
  std::vector<TailTerm> basis;
  std::vector<MonomialSum> l_basis;
  /// Riemann-Liouville images of the constant tail term can hit a gamma
  /// pole; the constant is then removed from the tail.
  bool constant_dropped = false;
};

/// Rows: L-images over the interior nodes, plain kernel/tail values over the
/// boundary nodes, then the moment rows P^T. Columns run over all nodes
/// (interior first) followed by the tail.
///
/// Throws DomainError when a Riemann-Liouville problem contains the origin or
/// an operator image is not finite at a node.
CollocationSystem assemble_collocation(const CollocationProblem& problem,
                                       const MonomialSum& kernel,
                                       const TailSpec& tail);

struct CollocationReport {
  double cond_before = 0.0;
  double cond_after = 0.0;
  int shift_n = 0;
  /// RMSE of f - L sigma over the interior collocation nodes.
  double node_rmse = 0.0;
  /// RMSE of f - L sigma over a 24 x 24 grid strictly inside the domain.
  double heldout_rmse = 0.0;
  /// RMSE of g - sigma over the boundary nodes.
  double boundary_rmse = 0.0;
  /// max |P^T lambda|.
  double moment_residual = 0.0;
  bool constant_dropped = false;
};

struct CollocationSolution {
  Interpolant interpolant;
  MonomialSum l_kernel;
  std::vector<MonomialSum> l_basis;
  CollocationReport report;
};

CollocationSolution solve_collocation(const CollocationProblem& problem,
                                      const MonomialSum& kernel,
                                      const TailSpec& tail,
                                      const std::optional<PrecondConfig>& precond =
                                          PrecondConfig{});

/// L sigma at x.
double apply_to_solution(const CollocationSolution& solution,
                         const Eigen::Ref<const Eigen::VectorXd>& x);

/// Grid of n^d points at (i + 1) / (n + 1) of each side.
Eigen::MatrixXd interior_grid(const Domain& domain, int n);

}  // namespace frbf
