#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "frbf/monomial_sum.hpp"
#include "frbf/nodes.hpp"
#include "frbf/precond.hpp"

namespace frbf {

enum class TailKind { multivariate, radial };

/// Polynomial tail appended to the kernel expansion.
///   multivariate: all monomials of total degree <= m - 1 in d variables,
///                 Q = C(m - 1 + d, d).
///   radial:       {1, r^{1+o}, ..., r^{m-1+o}} with r = |x|, Q = m.
struct TailSpec {
  TailKind kind = TailKind::multivariate;
  int m = 1;
  int d = 2;
  double o = 0.0;

  int size() const;
};

/// One tail basis function: x^exponents (multivariate) or |x|^radial_power.
struct TailTerm {
  std::vector<int> exponents;
  double radial_power = 0.0;
  bool radial = false;

  double operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const;
};

/// Basis in graded-lex order (multivariate) or increasing power (radial).
std::vector<TailTerm> tail_basis(const TailSpec& tail);

/// Block system
///   [ A  P ] [lambda]   [rhs_top]
///   [ C  0 ] [ beta ] = [   0   ]
/// with C = P^T for interpolation. Collocation fills A and P with operator
/// images and keeps the plain moment rows in C.
struct SaddleSystem {
  Eigen::MatrixXd A;
  Eigen::MatrixXd P;
  Eigen::MatrixXd moments;
  Eigen::VectorXd rhs;

  Eigen::Index centers() const noexcept { return A.cols(); }
  Eigen::Index tail_size() const noexcept { return P.cols(); }

  /// The full (N_p + Q) x (N_p + Q) matrix.
  Eigen::MatrixXd matrix() const;
};

struct SolveResult {
  Eigen::VectorXd lambda;
  Eigen::VectorXd beta;
  /// ||G x - U|| / ||U|| on the original system.
  double relative_residual = 0.0;
  /// Filled when the solve went through the preconditioner.
  std::optional<PrecondResult> precond;
};

struct Interpolant {
  Eigen::MatrixXd centers;
  Eigen::VectorXd lambda;
  Eigen::VectorXd beta;
  MonomialSum kernel;
  TailSpec tail;
  std::vector<TailTerm> basis;
};

/// Interpolation system for values at nodes.all() (interior first).
SaddleSystem assemble_interpolation(const NodeSet& nodes,
                                    const MonomialSum& kernel,
                                    const TailSpec& tail,
                                    const Eigen::VectorXd& values);

/// Same, for an explicit center matrix (one point per row).
SaddleSystem assemble_interpolation(const Eigen::MatrixXd& centers,
                                    const MonomialSum& kernel,
                                    const TailSpec& tail,
                                    const Eigen::VectorXd& values);

/// Dense LU with partial pivoting, optionally on the preconditioned system.
/// Throws SingularSystemError on a zero pivot and SolveError when the
/// relative residual exceeds `max_residual`.
SolveResult solve_system(const SaddleSystem& system,
                         const std::optional<PrecondConfig>& precondition = {},
                         double max_residual = 1e-8);

/// Assembles, solves and packages an interpolant.
Interpolant fit_interpolant(const Eigen::MatrixXd& centers,
                            const MonomialSum& kernel, const TailSpec& tail,
                            const Eigen::VectorXd& values,
                            const std::optional<PrecondConfig>& precondition = {},
                            SolveResult* result = nullptr);

double evaluate_interpolant(const Interpolant& s,
                            const Eigen::Ref<const Eigen::VectorXd>& x);

/// Evaluates at every row of `points`.
Eigen::VectorXd evaluate_interpolant_rows(const Interpolant& s,
                                          const Eigen::MatrixXd& points);

/// sqrt(mean((truth - approx)^2)). Throws LengthMismatchError.
double rmse(std::span<const double> truth, std::span<const double> approx);
double rmse(const Eigen::VectorXd& truth, const Eigen::VectorXd& approx);

}  // namespace frbf
