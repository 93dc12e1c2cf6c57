#include "frbf/interpolate.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "frbf/errors.hpp"

namespace frbf {

namespace {

// Exponent vectors of total degree `degree` in d variables, first exponent
// descending (x^2, xy, y^2 for d = 2).
void append_degree(int degree, int d, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == d - 1) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = degree; k >= 0; --k) {
    prefix.push_back(k);
    append_degree(degree - k, d, prefix, out);
    prefix.pop_back();
  }
}

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

int TailSpec::size() const {
  if (m <= 0) return 0;
  if (kind == TailKind::radial) return m;
  return static_cast<int>(std::lround(binomial(m - 1 + d, d)));
}

double TailTerm::operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (radial) {
    if (radial_power == 0.0) return 1.0;
    return std::pow(x.norm(), radial_power);
  }
  double value = 1.0;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    for (int k = 0; k < exponents[j]; ++k) value *= x(static_cast<Eigen::Index>(j));
  }
  return value;
}

std::vector<TailTerm> tail_basis(const TailSpec& tail) {
  std::vector<TailTerm> basis;
  if (tail.m <= 0) return basis;
  if (tail.kind == TailKind::radial) {
    basis.push_back({{}, 0.0, true});
    for (int k = 1; k < tail.m; ++k) {
      basis.push_back({{}, k + tail.o, true});
    }
    return basis;
  }
  if (tail.d < 1) throw DimensionError("tail_basis: dimension must be positive");
  std::vector<std::vector<int>> exponents;
  std::vector<int> prefix;
  for (int degree = 0; degree < tail.m; ++degree) {
    append_degree(degree, tail.d, prefix, exponents);
  }
  for (auto& e : exponents) basis.push_back({.exponents = std::move(e)});
  return basis;
}

Eigen::MatrixXd SaddleSystem::matrix() const {
  const Eigen::Index rows_top = A.rows();
  const Eigen::Index n = A.cols();
  const Eigen::Index q = P.cols();
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(rows_top + moments.rows(), n + q);
  G.topLeftCorner(rows_top, n) = A;
  G.topRightCorner(rows_top, q) = P;
  G.bottomLeftCorner(moments.rows(), n) = moments;
  return G;
}

SaddleSystem assemble_interpolation(const NodeSet& nodes,
                                    const MonomialSum& kernel,
                                    const TailSpec& tail,
                                    const Eigen::VectorXd& values) {
  return assemble_interpolation(nodes.all(), kernel, tail, values);
}

SaddleSystem assemble_interpolation(const Eigen::MatrixXd& centers,
                                    const MonomialSum& kernel,
                                    const TailSpec& tail,
                                    const Eigen::VectorXd& values) {
  const Eigen::Index n = centers.rows();
  if (values.size() != n) {
    throw LengthMismatchError(fmt::format(
        "assemble_interpolation: {} values for {} centers", values.size(), n));
  }
  const auto basis = tail_basis(tail);
  const auto q = static_cast<Eigen::Index>(basis.size());

  SaddleSystem system;
  system.A.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    system.A(j, j) = kernel(0.0);
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const double value = kernel((centers.row(j) - centers.row(k)).norm());
      system.A(j, k) = value;
      system.A(k, j) = value;
    }
  }
  system.P.resize(n, q);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < q; ++k) {
      system.P(j, k) = basis[static_cast<std::size_t>(k)](centers.row(j).transpose());
    }
  }
  system.moments = system.P.transpose();
  system.rhs = Eigen::VectorXd::Zero(n + q);
  system.rhs.head(n) = values;
  return system;
}

SolveResult solve_system(const SaddleSystem& system,
                         const std::optional<PrecondConfig>& precondition_config,
                         double max_residual) {
  const Eigen::MatrixXd G = system.matrix();
  if (G.rows() != G.cols()) {
    throw DimensionError("solve_system: block system is not square");
  }
  SolveResult result;
  const Eigen::MatrixXd* lhs = &G;
  const Eigen::VectorXd* rhs = &system.rhs;
  if (precondition_config) {
    result.precond = precondition(G, system.rhs, *precondition_config);
    lhs = &result.precond->G_M;
    rhs = &result.precond->transformed_rhs;
  }

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(*lhs);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (pivots.size() == 0 || pivots.minCoeff() == 0.0 ||
      pivots.minCoeff() <= pivots.maxCoeff() * std::numeric_limits<double>::epsilon()) {
    throw SingularSystemError(
        "solve_system: system is singular (centers not unisolvent?)");
  }
  const Eigen::VectorXd x = lu.solve(*rhs);

  const double rhs_norm = system.rhs.norm();
  const double residual_norm = (G * x - system.rhs).norm();
  result.relative_residual =
      rhs_norm > 0.0 ? residual_norm / rhs_norm : residual_norm;
  if (!x.allFinite() || !(result.relative_residual <= max_residual)) {
    throw SolveError(fmt::format("solve_system: relative residual {:.3e} exceeds {:.1e}",
                                 result.relative_residual, max_residual));
  }
  const Eigen::Index n = system.centers();
  result.lambda = x.head(n);
  result.beta = x.tail(x.size() - n);
  return result;
}

Interpolant fit_interpolant(const Eigen::MatrixXd& centers,
                            const MonomialSum& kernel, const TailSpec& tail,
                            const Eigen::VectorXd& values,
                            const std::optional<PrecondConfig>& precondition_config,
                            SolveResult* result) {
  const SaddleSystem system = assemble_interpolation(centers, kernel, tail, values);
  SolveResult solved = solve_system(system, precondition_config);
  Interpolant s{centers, solved.lambda, solved.beta, kernel, tail, tail_basis(tail)};
  if (result) *result = std::move(solved);
  return s;
}

double evaluate_interpolant(const Interpolant& s,
                            const Eigen::Ref<const Eigen::VectorXd>& x) {
  double value = 0.0;
  for (Eigen::Index j = 0; j < s.centers.rows(); ++j) {
    value += s.lambda(j) * s.kernel((x - s.centers.row(j).transpose()).norm());
  }
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    value += s.beta(static_cast<Eigen::Index>(k)) * s.basis[k](x);
  }
  return value;
}

Eigen::VectorXd evaluate_interpolant_rows(const Interpolant& s,
                                          const Eigen::MatrixXd& points) {
  Eigen::VectorXd out(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    out(i) = evaluate_interpolant(s, points.row(i).transpose());
  }
  return out;
}

double rmse(std::span<const double> truth, std::span<const double> approx) {
  if (truth.size() != approx.size() || truth.empty()) {
    throw LengthMismatchError(
        fmt::format("rmse: lengths {} and {} (need equal, non-zero)",
                    truth.size(), approx.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double e = truth[i] - approx[i];
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(truth.size()));
}

double rmse(const Eigen::VectorXd& truth, const Eigen::VectorXd& approx) {
  return rmse(std::span<const double>(truth.data(), static_cast<std::size_t>(truth.size())),
              std::span<const double>(approx.data(), static_cast<std::size_t>(approx.size())));
}

}  // namespace frbf
