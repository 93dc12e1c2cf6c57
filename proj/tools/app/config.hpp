#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <frbf/interpolate.hpp>
#include <frbf/kernels.hpp>
#include <frbf/precond.hpp>
#include <frbf/specfun.hpp>

namespace frbf::app {

/// Bad keys, values or combinations in an experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { interpolate, collocate, kernel_table, kernel_catalog };

/// automatic: on for partial/full fractional kernels and for collocation.
enum class PrecondPolicy { automatic, on, off };

enum class OutputFormat { csv, json };

struct AlphaRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.1;
};

struct ExperimentConfig {
  Mode mode = Mode::interpolate;

  Family family = Family::false_tps;
  double N = 3.22;
  std::optional<double> c0;
  /// Kernel scale; defaults to the domain scale (1 for kernel-table).
  std::optional<double> b;
  /// Defaults to exponent_shift, or full_fractional when collocating.
  std::optional<FracMode> frac_mode;
  DerivativeKind frac_kind = DerivativeKind::riemann_liouville;

  /// Used when `alpha_range` is unset. May be empty.
  std::vector<double> alphas{0.0};
  std::optional<AlphaRange> alpha_range;

  /// Defaults to multivariate, or radial when collocating.
  std::optional<TailKind> tail;
  /// Overrides the CPD order computed over the mode's alpha range.
  std::optional<int> m;

  int dim = 2;
  double domain_lower = 0.28;
  double domain_upper = 1.48;
  int ni = 100;
  /// Total boundary nodes; must be a lattice count for some per-side value.
  int nb = 40;
  int halton_skip = 0;
  double inset_margin = 0.0;
  bool near_boundary_ring = false;
  double ring_offset = 0.02;

  std::string problem = "sin8-interp";
  double beta = 0.0;
  DerivativeKind operator_kind = DerivativeKind::caputo;

  double M = 10.0;
  int n_max = 64;
  PrecondPolicy precondition = PrecondPolicy::automatic;

  /// Side of the held-out grid used for the interpolation rmse_heldout column.
  int heldout_n = 32;
  /// Side of the uniform sampling grid written to grid_out.
  int grid_n = 41;
  /// Worker threads for sweep rows; 0 means hardware concurrency.
  int threads = 1;

  std::string out;
  OutputFormat format = OutputFormat::csv;
  std::string nodes_in;
  std::string nodes_out;
  std::string weights_out;
  std::string grid_out;
};

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view name);
std::string_view to_string(TailKind kind);
TailKind parse_tail(std::string_view name);
PrecondPolicy parse_precond_policy(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// Reads a flat JSON object whose keys mirror ExperimentConfig fields.
/// Unknown keys are rejected.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(std::string_view json_text);

/// Parses "a,b".
std::pair<double, double> parse_domain(std::string_view text);

/// Parses "x", "x,y,z" or "start:stop:step".
void parse_alpha_spec(std::string_view text, ExperimentConfig& config);

/// Explicit list, or the inclusive range rounded to 12 decimals.
std::vector<double> alpha_values(const ExperimentConfig& config);

FracMode effective_frac_mode(const ExperimentConfig& config);
TailKind effective_tail(const ExperimentConfig& config);
double effective_scale(const ExperimentConfig& config);
bool uses_preconditioner(const ExperimentConfig& config);

/// Kernel spec at the given alpha.
KernelSpec kernel_spec(const ExperimentConfig& config, double alpha);

/// Per-side count whose boundary lattice has exactly `config.nb` points.
int boundary_per_side(const ExperimentConfig& config);

/// Checks value ranges and mode-level combinations. Kernel restrictions that
/// depend on alpha are checked by the sweeps.
void validate(const ExperimentConfig& config);

/// Canonical JSON of every field that affects results (output paths and
/// thread count excluded).
std::string canonical_json(const ExperimentConfig& config);

/// 64-bit FNV-1a of canonical_json, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace frbf::app
