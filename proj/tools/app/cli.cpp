#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <frbf/errors.hpp>

#include "config.hpp"
#include "output.hpp"
#include "sweep.hpp"

namespace frbf::app {

namespace {

struct Overrides {
  std::string mode;
  std::string config_path;
  std::optional<double> N, beta, M, b, c0;
  std::optional<int> ni, nb, seed_skip, m, n_max, threads, grid_n;
  std::optional<std::string> alpha, family, tail, domain, out, format,
      frac_mode, frac_kind, operator_kind, problem, precondition, nodes_in,
      nodes_out, weights_out, grid_out;
};

template <typename T>
void set_if(std::optional<T>& target, const std::optional<T>& value) {
  if (value) target = value;
}

template <typename T>
void set_if(T& target, const std::optional<T>& value) {
  if (value) target = *value;
}

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig c =
      o.config_path.empty() ? ExperimentConfig{} : load_config(o.config_path);
  if (!o.mode.empty()) c.mode = parse_mode(o.mode);
  try {
    if (o.family) c.family = parse_family(*o.family);
    if (o.frac_mode) c.frac_mode = parse_frac_mode(*o.frac_mode);
    if (o.frac_kind) c.frac_kind = parse_derivative_kind(*o.frac_kind);
    if (o.operator_kind) c.operator_kind = parse_derivative_kind(*o.operator_kind);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  set_if(c.N, o.N);
  set_if(c.beta, o.beta);
  set_if(c.M, o.M);
  set_if(c.b, o.b);
  set_if(c.c0, o.c0);
  set_if(c.ni, o.ni);
  set_if(c.nb, o.nb);
  set_if(c.halton_skip, o.seed_skip);
  set_if(c.m, o.m);
  set_if(c.n_max, o.n_max);
  set_if(c.threads, o.threads);
  set_if(c.grid_n, o.grid_n);
  if (o.alpha) parse_alpha_spec(*o.alpha, c);
  if (o.tail) c.tail = parse_tail(*o.tail);
  if (o.domain) std::tie(c.domain_lower, c.domain_upper) = parse_domain(*o.domain);
  if (o.format) c.format = parse_format(*o.format);
  if (o.precondition) c.precondition = parse_precond_policy(*o.precondition);
  set_if(c.out, o.out);
  set_if(c.problem, o.problem);
  set_if(c.nodes_in, o.nodes_in);
  set_if(c.nodes_out, o.nodes_out);
  set_if(c.weights_out, o.weights_out);
  set_if(c.grid_out, o.grid_out);
  return c;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw ConfigError(fmt::format("cannot write '{}'", path));
  return file;
}

template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file = open_output(path);
  write(file);
}

int run_sweep(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err) {
  const SweepTable table = config.mode == Mode::interpolate
                               ? run_interpolation_sweep(config)
                               : run_collocation_sweep(config);
  for (const auto& s : table.skipped) {
    fmt::print(err, "skipped alpha = {}: {}\n", format_number(s.alpha), s.reason);
  }
  for (const auto& row : table.rows) {
    if (row.status == RowStatus::error) {
      fmt::print(err, "alpha = {} failed: {}\n", format_number(row.alpha),
                 row.message);
    }
  }
  emit(config.out, out, [&](std::ostream& s) {
    if (config.format == OutputFormat::json) {
      write_sweep_json(s, table, config);
    } else {
      write_sweep_csv(s, table);
    }
  });
  if (!config.nodes_out.empty()) {
    std::ofstream file = open_output(config.nodes_out);
    write_nodes_csv(file, table.nodes);
  }
  if (!config.weights_out.empty()) {
    std::ofstream file = open_output(config.weights_out);
    write_weights_csv(file, table);
  }
  if (!config.grid_out.empty()) {
    std::ofstream file = open_output(config.grid_out);
    write_grid_csv(file, table, config);
  }
  return table.all_failed() ? kExitNumerical : kExitOk;
}

int dispatch(const ExperimentConfig& config, std::ostream& out,
             std::ostream& err) {
  validate(config);
  switch (config.mode) {
    case Mode::interpolate:
    case Mode::collocate:
      return run_sweep(config, out, err);
    case Mode::kernel_table: {
      const KernelTable table = kernel_table(config);
      emit(config.out, out, [&](std::ostream& s) {
        if (config.format == OutputFormat::json) {
          write_kernel_table_json(s, table);
        } else {
          write_kernel_table_csv(s, table);
        }
      });
      return kExitOk;
    }
    case Mode::kernel_catalog: {
      const auto entries = kernel_catalog(config);
      emit(config.out, out, [&](std::ostream& s) {
        if (config.format == OutputFormat::json) {
          write_catalog_json(s, entries);
        } else {
          write_catalog_csv(s, entries);
        }
      });
      return kExitOk;
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial radial kernels, RBF interpolation and collocation"};
  app.name("frbf");
  Overrides o;
  app.add_option("mode", o.mode,
                 "interpolate | collocate | kernel-table | kernel-catalog");
  app.add_option("--config", o.config_path, "JSON config file");
  app.add_option("--N", o.N, "Kernel exponent");
  app.add_option("--alpha", o.alpha, "a | a,b,c | start:stop:step");
  app.add_option("--beta", o.beta, "Operator parameter");
  app.add_option("--family", o.family,
                 "two_term | three_term_tps | false_tps | four_term");
  app.add_option("--frac-mode", o.frac_mode,
                 "none | exponent_shift | partial_fractional | full_fractional");
  app.add_option("--frac-kind", o.frac_kind, "riemann_liouville | caputo");
  app.add_option("--operator-kind", o.operator_kind, "riemann_liouville | caputo");
  app.add_option("--tail", o.tail, "multivariate | radial");
  app.add_option("--m", o.m, "CPD order override");
  app.add_option("--b", o.b, "Kernel scale override");
  app.add_option("--c0", o.c0, "Kernel normalisation constant");
  app.add_option("--domain", o.domain, "a,b for [a,b]^d");
  app.add_option("--ni", o.ni, "Interior nodes");
  app.add_option("--nb", o.nb, "Boundary nodes");
  app.add_option("--seed-skip", o.seed_skip, "Halton skip");
  app.add_option("--problem", o.problem, "sin8-interp | rational-cos | sin8-colloc");
  app.add_option("--M", o.M, "Condition bound for the preconditioner");
  app.add_option("--n-max", o.n_max, "Largest shift exponent");
  app.add_option("--precondition", o.precondition, "auto | on | off");
  app.add_option("--threads", o.threads, "Sweep worker threads (0 = all cores)");
  app.add_option("--out", o.out, "Output path (default stdout)");
  app.add_option("--format", o.format, "csv | json");
  app.add_option("--nodes-in", o.nodes_in, "Read nodes from CSV");
  app.add_option("--nodes-out", o.nodes_out, "Write nodes to CSV");
  app.add_option("--weights-out", o.weights_out, "Write weights to CSV");
  app.add_option("--grid-out", o.grid_out, "Write sampled solutions to CSV");
  app.add_option("--grid-n", o.grid_n, "Sampling grid side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "frbf: {}\n", e.what());
    return kExitConfig;
  }

  try {
    return dispatch(resolve(o), out, err);
  } catch (const ConfigError& e) {
    fmt::print(err, "frbf: config error: {}\n", e.what());
    return kExitConfig;
  } catch (const RestrictionError& e) {
    fmt::print(err, "frbf: restriction violated: {}\n", e.what());
    return kExitConfig;
  } catch (const Error& e) {
    fmt::print(err, "frbf: {}\n", e.what());
    return kExitConfig;
  }
}

}  // namespace frbf::app
