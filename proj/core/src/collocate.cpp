#include "frbf/collocate.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "frbf/errors.hpp"

namespace frbf {

namespace {

constexpr int kHeldoutGrid = 24;

// D^order applied to c r^p, divided by r^divide.
void append_derivative(std::vector<MonomialTerm>& out, const MonomialTerm& term,
                       double order, DerivativeKind kind, double divide) {
  if (term.power == 0.0 && kind == DerivativeKind::caputo && order > 0.0) {
    return;
  }
  const MonomialTerm d = frac_deriv_monomial(term.power, order, kind);
  out.push_back({term.coefficient * d.coefficient, d.power - divide});
}

double max_abs(const Eigen::VectorXd& v) {
  return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

double RadialOperator::order() const noexcept { return std::max(2.0 + beta, 0.0); }

OperatorOrders operator_orders(const RadialOperator& op) {
  // The boundary operator is the identity, of order 0.
  const double q = std::max(op.order(), 0.0);
  return {q, q > 0.0 ? q - 1.0 : 0.0};
}

MonomialSum apply_operator(const RadialOperator& op, const MonomialSum& f) {
  std::vector<MonomialTerm> out;
  for (const auto& term : f.terms()) {
    append_derivative(out, term, 2.0 + op.beta, op.kind, 0.0);
    append_derivative(out, term, 1.0 + op.beta, op.kind, 1.0);
    if (op.beta != 0.0) {
      out.push_back({op.beta * term.coefficient, term.power + 1.0});
    }
  }
  return MonomialSum(std::move(out));
}

CollocationSystem assemble_collocation(const CollocationProblem& problem,
                                       const MonomialSum& kernel,
                                       const TailSpec& tail) {
  const NodeSet& nodes = problem.nodes;
  if (problem.op.kind == DerivativeKind::riemann_liouville &&
      problem.domain.contains(Eigen::VectorXd::Zero(problem.domain.dim()))) {
    throw DomainError(
        "Riemann-Liouville collocation needs a domain that excludes the origin");
  }
  if (!problem.f || !problem.g) {
    throw DomainError("collocation problem needs both f and g");
  }

  CollocationSystem out;
  out.l_kernel = apply_operator(problem.op, kernel);
  for (const TailTerm& term : tail_basis(tail)) {
    if (!term.radial) {
      throw DomainError("collocation needs a radial tail");
    }
    const MonomialSum profile({{1.0, term.radial_power}});
    try {
      out.l_basis.push_back(apply_operator(problem.op, profile));
      out.basis.push_back(term);
    } catch (const PoleError&) {
      if (term.radial_power != 0.0) throw;
      out.constant_dropped = true;
    } catch (const DomainError&) {
      if (term.radial_power != 0.0) throw;
      out.constant_dropped = true;
    }
  }

  const Eigen::MatrixXd centers = nodes.all();
  const Eigen::Index ni = nodes.interior_count();
  const Eigen::Index np = centers.rows();
  const auto q = static_cast<Eigen::Index>(out.basis.size());

  SaddleSystem& s = out.system;
  s.A.resize(np, np);
  s.P.resize(np, q);
  s.moments.resize(q, np);
  s.rhs = Eigen::VectorXd::Zero(np + q);
  for (Eigen::Index j = 0; j < np; ++j) {
    const Eigen::VectorXd xj = centers.row(j).transpose();
    const bool interior = j < ni;
    const MonomialSum& row_kernel = interior ? out.l_kernel : kernel;
    for (Eigen::Index k = 0; k < np; ++k) {
      s.A(j, k) = row_kernel((xj - centers.row(k).transpose()).norm());
    }
    const double rj = xj.norm();
    for (Eigen::Index k = 0; k < q; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      s.P(j, k) = interior ? out.l_basis[kk](rj) : out.basis[kk](xj);
      s.moments(k, j) = out.basis[kk](xj);
    }
    s.rhs(j) = interior ? problem.f(xj) : problem.g(xj);
  }
  if (!s.A.allFinite() || !s.P.allFinite() || !s.rhs.allFinite()) {
    throw DomainError("collocation system has non-finite entries");
  }
  return out;
}

CollocationSolution solve_collocation(const CollocationProblem& problem,
                                      const MonomialSum& kernel,
                                      const TailSpec& tail,
                                      const std::optional<PrecondConfig>& precond) {
  const CollocationSystem assembled = assemble_collocation(problem, kernel, tail);
  const SolveResult solved = solve_system(assembled.system, precond);

  CollocationSolution solution{
      Interpolant{problem.nodes.all(), solved.lambda, solved.beta, kernel, tail,
                  assembled.basis},
      assembled.l_kernel, assembled.l_basis, {}};
  CollocationReport& report = solution.report;
  report.constant_dropped = assembled.constant_dropped;
  if (solved.precond) {
    report.cond_before = solved.precond->cond_before;
    report.cond_after = solved.precond->cond_after;
    report.shift_n = solved.precond->n;
  } else {
    report.cond_before = condition_number(assembled.system.matrix());
    report.cond_after = report.cond_before;
  }
  report.moment_residual = max_abs(assembled.system.moments * solved.lambda);

  const NodeSet& nodes = problem.nodes;
  const auto residual_rmse = [&](const Eigen::MatrixXd& points) {
    Eigen::VectorXd f(points.rows()), lsigma(points.rows());
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      f(i) = problem.f(points.row(i).transpose());
      lsigma(i) = apply_to_solution(solution, points.row(i).transpose());
    }
    return points.rows() ? rmse(f, lsigma) : 0.0;
  };
  report.node_rmse = residual_rmse(nodes.interior);
  report.heldout_rmse = residual_rmse(interior_grid(problem.domain, kHeldoutGrid));
  if (nodes.boundary_count() > 0) {
    Eigen::VectorXd g(nodes.boundary_count());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      g(i) = problem.g(nodes.boundary.row(i).transpose());
    }
    report.boundary_rmse =
        rmse(g, evaluate_interpolant_rows(solution.interpolant, nodes.boundary));
  }
  return solution;
}

double apply_to_solution(const CollocationSolution& solution,
                         const Eigen::Ref<const Eigen::VectorXd>& x) {
  const Interpolant& s = solution.interpolant;
  double value = 0.0;
  for (Eigen::Index j = 0; j < s.centers.rows(); ++j) {
    value += s.lambda(j) * solution.l_kernel((x - s.centers.row(j).transpose()).norm());
  }
  const double r = x.norm();
  for (std::size_t k = 0; k < solution.l_basis.size(); ++k) {
    value += s.beta(static_cast<Eigen::Index>(k)) * solution.l_basis[k](r);
  }
  return value;
}

Eigen::MatrixXd interior_grid(const Domain& domain, int n) {
  const int d = domain.dim();
  Eigen::Index total = 1;
  for (int j = 0; j < d; ++j) total *= n;
  Eigen::MatrixXd grid(total, d);
  const Eigen::VectorXd side = domain.upper() - domain.lower();
  for (Eigen::Index i = 0; i < total; ++i) {
    Eigen::Index rest = i;
    for (int j = d - 1; j >= 0; --j) {
      const auto k = static_cast<double>(rest % n);
      rest /= n;
      grid(i, j) = domain.lower()(j) + side(j) * (k + 1.0) / (n + 1.0);
    }
  }
  return grid;
}

}  // namespace frbf
