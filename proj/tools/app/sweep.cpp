#include "sweep.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <thread>

#include <fmt/format.h>

#include <frbf/catalog.hpp>
#include <frbf/collocate.hpp>
#include <frbf/errors.hpp>
#include <frbf/kernels.hpp>
#include <frbf/precond.hpp>

namespace frbf::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  std::size_t workers = threads == 0 ? std::thread::hardware_concurrency()
                                     : static_cast<std::size_t>(threads);
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

SweepRow failed_row(double alpha, int m, std::string message) {
  SweepRow row;
  row.alpha = alpha;
  row.status = RowStatus::error;
  row.rmse = row.cond = row.cond_g = row.rmse_heldout = kNaN;
  row.boundary_rmse = row.moment_residual = kNaN;
  row.m = m;
  row.message = std::move(message);
  return row;
}

std::string describe(const NoShiftFoundError& e) {
  return fmt::format("{} (best n = {}, cond = {:.6g})", e.what(), e.best_n(),
                     e.best_cond());
}

Eigen::VectorXd sample(const ScalarField& field, const Eigen::MatrixXd& points) {
  Eigen::VectorXd values(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    values(i) = field(points.row(i).transpose());
  }
  return values;
}

const TestProblem& lookup_problem(const std::string& name) {
  try {
    return find_problem(name);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

std::optional<PrecondConfig> precond_config(const ExperimentConfig& config) {
  if (!uses_preconditioner(config)) return std::nullopt;
  return PrecondConfig{config.M, config.n_max};
}

}  // namespace

bool SweepTable::all_failed() const {
  if (rows.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) {
    return r.status == RowStatus::error;
  });
}

int sweep_cpd_order(const ExperimentConfig& config) {
  if (config.m) return *config.m;
  const KernelSpec spec = kernel_spec(config, 0.0);
  switch (spec.frac_mode) {
    case FracMode::none:
      return cpd_order_over_alpha_range(spec, 0.0, 0.0);
    case FracMode::exponent_shift:
      return cpd_order_over_alpha_range(spec, 0.0, 1.0);
    case FracMode::partial_fractional:
      return cpd_order_over_alpha_range(spec, -1.0, 1.0);
    case FracMode::full_fractional:
      return cpd_order_over_alpha_range(spec, -2.0, 2.0);
  }
  return 1;
}

Domain sweep_domain(const ExperimentConfig& config) {
  return Domain::square(config.domain_lower, config.domain_upper, config.dim);
}

NodeSet sweep_nodes(const ExperimentConfig& config) {
  if (!config.nodes_in.empty()) {
    std::ifstream in(config.nodes_in);
    if (!in) {
      throw ConfigError(fmt::format("cannot open nodes '{}'", config.nodes_in));
    }
    NodeSet nodes = read_nodes_csv(in);
    if (nodes.dim() != config.dim) {
      throw ConfigError(fmt::format("nodes file has dimension {}, config {}",
                                    nodes.dim(), config.dim));
    }
    return nodes;
  }
  NodeOptions options;
  options.halton_skip = config.halton_skip;
  options.inset_margin = config.inset_margin;
  options.near_boundary_ring = config.near_boundary_ring;
  options.ring_offset = config.ring_offset;
  return make_node_set(sweep_domain(config), config.ni, boundary_per_side(config),
                       NodeLayout::halton_interior_cartesian_boundary, options);
}

SweepTable run_interpolation_sweep(const ExperimentConfig& config) {
  validate(config);
  const std::vector<double> alphas = alpha_values(config);
  validate_restrictions(kernel_spec(config, 0.0), 0.0);
  for (double alpha : alphas) validate_spec(kernel_spec(config, alpha));

  const TestProblem& problem = lookup_problem(config.problem);
  const Domain domain = sweep_domain(config);
  const int m = sweep_cpd_order(config);
  const TailSpec tail{effective_tail(config), m, config.dim, 0.0};
  const auto precond = precond_config(config);

  SweepTable table;
  table.config_hash = config_hash(config);
  table.nodes = sweep_nodes(config);
  const Eigen::MatrixXd centers = table.nodes.all();
  const Eigen::VectorXd values = sample(problem.g, centers);
  const Eigen::MatrixXd heldout = interior_grid(domain, config.heldout_n);
  const Eigen::VectorXd heldout_values = sample(problem.g, heldout);

  table.rows.resize(alphas.size());
  parallel_for(alphas.size(), config.threads, [&](std::size_t i) {
    const double alpha = alphas[i];
    try {
      const MonomialSum kernel = build_kernel(kernel_spec(config, alpha));
      const SaddleSystem system =
          assemble_interpolation(centers, kernel, tail, values);
      const SolveResult solved = solve_system(system, precond);

      SweepRow row;
      row.alpha = alpha;
      row.m = m;
      if (solved.precond) {
        row.cond_g = solved.precond->cond_before;
        row.cond = solved.precond->cond_after;
        row.n_shift = solved.precond->n;
      } else {
        row.cond_g = condition_number(system.matrix());
        row.cond = row.cond_g;
      }
      Interpolant s{centers, solved.lambda, solved.beta, kernel, tail,
                    tail_basis(tail)};
      row.rmse = rmse(values, evaluate_interpolant_rows(s, centers));
      row.rmse_heldout = rmse(heldout_values, evaluate_interpolant_rows(s, heldout));
      row.boundary_rmse = kNaN;
      row.moment_residual =
          (system.P.transpose() * solved.lambda).cwiseAbs().maxCoeff();
      row.interpolant = std::move(s);
      table.rows[i] = std::move(row);
    } catch (const NoShiftFoundError& e) {
      table.rows[i] = failed_row(alpha, m, describe(e));
    } catch (const Error& e) {
      table.rows[i] = failed_row(alpha, m, e.what());
    }
  });
  return table;
}

SweepTable run_collocation_sweep(const ExperimentConfig& config) {
  validate(config);
  if (is_natural(config.N)) {
    throw RestrictionError(fmt::format("N = {} is a natural number", config.N));
  }
  const std::vector<double> alphas = alpha_values(config);
  const TestProblem& problem = lookup_problem(config.problem);
  if (!problem.f) {
    throw ConfigError(
        fmt::format("problem '{}' has no source term", config.problem));
  }
  const Domain domain = sweep_domain(config);
  const RadialOperator op{config.beta, config.operator_kind};
  if (op.kind == DerivativeKind::riemann_liouville &&
      domain.contains(Eigen::VectorXd::Zero(config.dim))) {
    throw ConfigError(
        "the Riemann-Liouville operator needs a domain that excludes the origin");
  }
  const OperatorOrders orders = operator_orders(op);
  const int m = sweep_cpd_order(config);
  const TailSpec tail{TailKind::radial, m, config.dim, orders.o};
  const auto precond = precond_config(config);

  SweepTable table;
  table.config_hash = config_hash(config);
  table.nodes = sweep_nodes(config);

  std::vector<double> admitted;
  for (double alpha : alphas) {
    const KernelSpec spec = kernel_spec(config, alpha);
    try {
      validate_spec(spec);
      validate_restrictions(spec, orders.q);
      admitted.push_back(alpha);
    } catch (const RestrictionError& e) {
      table.skipped.push_back({alpha, e.what()});
    }
  }

  const CollocationProblem colloc{domain, table.nodes, op, problem.f, problem.g};
  table.rows.resize(admitted.size());
  parallel_for(admitted.size(), config.threads, [&](std::size_t i) {
    const double alpha = admitted[i];
    try {
      const MonomialSum kernel = build_kernel(kernel_spec(config, alpha));
      CollocationSolution solution =
          solve_collocation(colloc, kernel, tail, precond);
      const CollocationReport& r = solution.report;
      SweepRow row;
      row.alpha = alpha;
      row.m = m;
      row.rmse = r.node_rmse;
      row.cond = r.cond_after;
      row.cond_g = r.cond_before;
      row.rmse_heldout = r.heldout_rmse;
      row.boundary_rmse = r.boundary_rmse;
      row.moment_residual = r.moment_residual;
      row.n_shift = r.shift_n;
      if (r.constant_dropped) row.message = "constant tail term dropped";
      row.interpolant = std::move(solution.interpolant);
      table.rows[i] = std::move(row);
    } catch (const NoShiftFoundError& e) {
      table.rows[i] = failed_row(alpha, m, describe(e));
    } catch (const Error& e) {
      table.rows[i] = failed_row(alpha, m, e.what());
    }
  });
  return table;
}

KernelTable kernel_table(const ExperimentConfig& config) {
  const std::vector<double> alphas = alpha_values(config);
  if (alphas.size() > 1) {
    throw ConfigError("kernel-table takes a single alpha");
  }
  const double alpha = alphas.empty() ? 0.0 : alphas.front();
  const MonomialSum kernel = build_kernel(kernel_spec(config, alpha));
  constexpr int kSamples = 256;
  KernelTable table;
  table.r.reserve(kSamples);
  table.tps.reserve(kSamples);
  table.phi.reserve(kSamples);
  for (int i = 1; i <= kSamples; ++i) {
    const double r = static_cast<double>(i) / kSamples;
    table.r.push_back(r);
    table.tps.push_back(std::pow(r, config.N) * std::log(r));
    table.phi.push_back(kernel(r));
  }
  return table;
}

std::vector<CatalogEntry> kernel_catalog(const ExperimentConfig& config) {
  std::vector<CatalogEntry> entries;
  for (Family family : {Family::two_term, Family::three_term_tps,
                        Family::false_tps, Family::four_term}) {
    for (double alpha : alpha_values(config)) {
      ExperimentConfig c = config;
      c.family = family;
      if (family == Family::three_term_tps) c.c0.reset();
      CatalogEntry entry;
      entry.family = family;
      entry.N = config.N;
      entry.alpha = alpha;
      const KernelSpec spec = kernel_spec(c, alpha);
      entry.b = spec.b;
      entry.frac_mode = spec.frac_mode;
      try {
        entry.c0 = effective_c0(spec);
        const MonomialSum kernel = build_kernel(spec);
        entry.terms = kernel.terms();
        entry.cpd_order = cpd_order(kernel);
      } catch (const Error& e) {
        entry.error = e.what();
      }
      entries.push_back(std::move(entry));
    }
  }
  return entries;
}

Eigen::MatrixXd uniform_grid(const Domain& domain, int n) {
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
      grid(i, j) = domain.lower()(j) + side(j) * k / (n - 1.0);
    }
  }
  return grid;
}

}  // namespace frbf::app
