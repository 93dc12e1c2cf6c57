#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <frbf/errors.hpp>
#include <frbf/nodes.hpp>

namespace frbf::app {

namespace {

using nlohmann::json;

template <typename Enum, std::size_t K>
Enum lookup(std::string_view name,
            const std::pair<std::string_view, Enum> (&table)[K],
            std::string_view what) {
  for (const auto& [key, value] : table) {
    if (key == name) return value;
  }
  throw ConfigError(fmt::format("unknown {} '{}'", what, name));
}

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("'{}' is not a number", text));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T get(const json& value, std::string_view key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(fmt::format("key '{}' has the wrong type", key));
  }
}

DerivativeKind parse_kind(std::string_view name) {
  try {
    return parse_derivative_kind(name);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

void apply_key(ExperimentConfig& c, const std::string& key, const json& v) {
  if (key == "mode") {
    c.mode = parse_mode(get<std::string>(v, key));
  } else if (key == "family") {
    try {
      c.family = parse_family(get<std::string>(v, key));
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "N") {
    c.N = get<double>(v, key);
  } else if (key == "c0") {
    c.c0 = get<double>(v, key);
  } else if (key == "b") {
    c.b = get<double>(v, key);
  } else if (key == "frac_mode") {
    try {
      c.frac_mode = parse_frac_mode(get<std::string>(v, key));
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "frac_kind") {
    c.frac_kind = parse_kind(get<std::string>(v, key));
  } else if (key == "alpha") {
    if (v.is_array()) {
      c.alphas = get<std::vector<double>>(v, key);
    } else if (v.is_string()) {
      parse_alpha_spec(v.get<std::string>(), c);
    } else {
      c.alphas = {get<double>(v, key)};
    }
  } else if (key == "alpha_start" || key == "alpha_stop" ||
             key == "alpha_step") {
    if (!c.alpha_range) c.alpha_range = AlphaRange{};
    const double x = get<double>(v, key);
    if (key == "alpha_start") c.alpha_range->start = x;
    if (key == "alpha_stop") c.alpha_range->stop = x;
    if (key == "alpha_step") c.alpha_range->step = x;
  } else if (key == "tail") {
    c.tail = parse_tail(get<std::string>(v, key));
  } else if (key == "m") {
    c.m = get<int>(v, key);
  } else if (key == "dim") {
    c.dim = get<int>(v, key);
  } else if (key == "domain") {
    if (v.is_string()) {
      std::tie(c.domain_lower, c.domain_upper) =
          parse_domain(v.get<std::string>());
    } else {
      const auto d = get<std::vector<double>>(v, key);
      if (d.size() != 2) throw ConfigError("domain must be [a, b]");
      c.domain_lower = d[0];
      c.domain_upper = d[1];
    }
  } else if (key == "ni") {
    c.ni = get<int>(v, key);
  } else if (key == "nb") {
    c.nb = get<int>(v, key);
  } else if (key == "halton_skip") {
    c.halton_skip = get<int>(v, key);
  } else if (key == "inset_margin") {
    c.inset_margin = get<double>(v, key);
  } else if (key == "near_boundary_ring") {
    c.near_boundary_ring = get<bool>(v, key);
  } else if (key == "ring_offset") {
    c.ring_offset = get<double>(v, key);
  } else if (key == "problem") {
    c.problem = get<std::string>(v, key);
  } else if (key == "beta") {
    c.beta = get<double>(v, key);
  } else if (key == "operator_kind") {
    c.operator_kind = parse_kind(get<std::string>(v, key));
  } else if (key == "M") {
    c.M = get<double>(v, key);
  } else if (key == "n_max") {
    c.n_max = get<int>(v, key);
  } else if (key == "precondition") {
    c.precondition = parse_precond_policy(get<std::string>(v, key));
  } else if (key == "heldout_n") {
    c.heldout_n = get<int>(v, key);
  } else if (key == "grid_n") {
    c.grid_n = get<int>(v, key);
  } else if (key == "threads") {
    c.threads = get<int>(v, key);
  } else if (key == "out") {
    c.out = get<std::string>(v, key);
  } else if (key == "format") {
    c.format = parse_format(get<std::string>(v, key));
  } else if (key == "nodes_in") {
    c.nodes_in = get<std::string>(v, key);
  } else if (key == "nodes_out") {
    c.nodes_out = get<std::string>(v, key);
  } else if (key == "weights_out") {
    c.weights_out = get<std::string>(v, key);
  } else if (key == "grid_out") {
    c.grid_out = get<std::string>(v, key);
  } else {
    throw ConfigError(fmt::format("unknown config key '{}'", key));
  }
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::interpolate:
      return "interpolate";
    case Mode::collocate:
      return "collocate";
    case Mode::kernel_table:
      return "kernel-table";
    case Mode::kernel_catalog:
      return "kernel-catalog";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  static constexpr std::pair<std::string_view, Mode> table[] = {
      {"interpolate", Mode::interpolate},
      {"collocate", Mode::collocate},
      {"kernel-table", Mode::kernel_table},
      {"kernel-catalog", Mode::kernel_catalog},
  };
  return lookup(name, table, "mode");
}

std::string_view to_string(TailKind kind) {
  return kind == TailKind::radial ? "radial" : "multivariate";
}

TailKind parse_tail(std::string_view name) {
  static constexpr std::pair<std::string_view, TailKind> table[] = {
      {"multivariate", TailKind::multivariate},
      {"radial", TailKind::radial},
  };
  return lookup(name, table, "tail");
}

PrecondPolicy parse_precond_policy(std::string_view name) {
  static constexpr std::pair<std::string_view, PrecondPolicy> table[] = {
      {"auto", PrecondPolicy::automatic},
      {"on", PrecondPolicy::on},
      {"off", PrecondPolicy::off},
  };
  return lookup(name, table, "precondition policy");
}

OutputFormat parse_format(std::string_view name) {
  static constexpr std::pair<std::string_view, OutputFormat> table[] = {
      {"csv", OutputFormat::csv},
      {"json", OutputFormat::json},
  };
  return lookup(name, table, "format");
}

ExperimentConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig config;
  for (const auto& [key, value] : root.items()) apply_key(config, key, value);
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::pair<double, double> parse_domain(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw ConfigError(fmt::format("domain '{}' is not of the form a,b", text));
  }
  return {parse_double(parts[0]), parse_double(parts[1])};
}

void parse_alpha_spec(std::string_view text, ExperimentConfig& config) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw ConfigError(
          fmt::format("alpha range '{}' is not start:stop:step", text));
    }
    config.alpha_range =
        AlphaRange{parse_double(parts[0]), parse_double(parts[1]),
                   parse_double(parts[2])};
    return;
  }
  config.alpha_range.reset();
  config.alphas.clear();
  if (text.empty()) return;
  for (auto part : split(text, ',')) config.alphas.push_back(parse_double(part));
}

std::vector<double> alpha_values(const ExperimentConfig& config) {
  if (!config.alpha_range) return config.alphas;
  const auto& r = *config.alpha_range;
  if (!(r.step > 0.0)) throw ConfigError("alpha_step must be positive");
  std::vector<double> values;
  if (r.stop < r.start) return values;
  const auto count = static_cast<long>(std::floor((r.stop - r.start) / r.step + 1e-9)) + 1;
  values.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const double a = r.start + static_cast<double>(i) * r.step;
    values.push_back(std::round(a * 1e12) / 1e12);
  }
  return values;
}

FracMode effective_frac_mode(const ExperimentConfig& config) {
  if (config.frac_mode) return *config.frac_mode;
  return config.mode == Mode::collocate ? FracMode::full_fractional
                                        : FracMode::exponent_shift;
}

TailKind effective_tail(const ExperimentConfig& config) {
  if (config.tail) return *config.tail;
  return config.mode == Mode::collocate ? TailKind::radial
                                        : TailKind::multivariate;
}

double effective_scale(const ExperimentConfig& config) {
  if (config.b) return *config.b;
  if (config.mode == Mode::kernel_table) return 1.0;
  return std::max(config.domain_upper, config.domain_lower);
}

bool uses_preconditioner(const ExperimentConfig& config) {
  switch (config.precondition) {
    case PrecondPolicy::on:
      return true;
    case PrecondPolicy::off:
      return false;
    case PrecondPolicy::automatic:
      break;
  }
  const FracMode mode = effective_frac_mode(config);
  return config.mode == Mode::collocate ||
         mode == FracMode::partial_fractional ||
         mode == FracMode::full_fractional;
}

KernelSpec kernel_spec(const ExperimentConfig& config, double alpha) {
  KernelSpec spec;
  spec.family = config.family;
  spec.N = config.N;
  spec.alpha = alpha;
  spec.b = effective_scale(config);
  spec.c0 = config.c0;
  spec.frac_mode = effective_frac_mode(config);
  spec.frac_kind = config.frac_kind;
  return spec;
}

int boundary_per_side(const ExperimentConfig& config) {
  if (config.nb == 0) return 0;
  for (int per_side = 1; per_side <= config.nb + 1; ++per_side) {
    const int count = boundary_node_count(config.dim, per_side);
    if (count == config.nb) return per_side;
    if (count > config.nb) break;
  }
  throw ConfigError(fmt::format(
      "nb = {} is not a boundary lattice count in {} dimensions (2D: 4k)",
      config.nb, config.dim));
}

void validate(const ExperimentConfig& config) {
  if (config.dim < 1 || config.dim > 8) {
    throw ConfigError(fmt::format("dim must be in 1..8, got {}", config.dim));
  }
  if (!(config.domain_lower < config.domain_upper)) {
    throw ConfigError("domain lower bound must be below the upper bound");
  }
  if (config.ni < 0 || config.nb < 0) {
    throw ConfigError("node counts must be non-negative");
  }
  if (config.halton_skip < 0) throw ConfigError("halton_skip must be >= 0");
  if (!(config.M > 1.0)) throw ConfigError("M must exceed 1");
  if (config.n_max < 1) throw ConfigError("n_max must be >= 1");
  if (config.m && *config.m < 1) throw ConfigError("m must be >= 1");
  if (config.heldout_n < 1 || config.grid_n < 2) {
    throw ConfigError("heldout_n must be >= 1 and grid_n >= 2");
  }
  if (config.threads < 0) throw ConfigError("threads must be >= 0");
  if (config.family == Family::three_term_tps && config.c0) {
    throw ConfigError("three_term_tps has no free c0");
  }
  if (config.mode == Mode::collocate &&
      effective_tail(config) != TailKind::radial) {
    throw ConfigError("collocation needs the radial tail");
  }
  if (config.nodes_in.empty()) boundary_per_side(config);
  (void)alpha_values(config);
}

std::string canonical_json(const ExperimentConfig& config) {
  json j;
  j["mode"] = to_string(config.mode);
  j["family"] = to_string(config.family);
  j["N"] = config.N;
  j["c0"] = config.c0 ? json(*config.c0) : json(nullptr);
  j["b"] = effective_scale(config);
  j["frac_mode"] = to_string(effective_frac_mode(config));
  j["frac_kind"] = to_string(config.frac_kind);
  j["alpha"] = alpha_values(config);
  j["tail"] = to_string(effective_tail(config));
  j["m"] = config.m ? json(*config.m) : json(nullptr);
  j["dim"] = config.dim;
  j["domain"] = {config.domain_lower, config.domain_upper};
  j["ni"] = config.ni;
  j["nb"] = config.nb;
  j["halton_skip"] = config.halton_skip;
  j["inset_margin"] = config.inset_margin;
  j["near_boundary_ring"] = config.near_boundary_ring;
  j["ring_offset"] = config.ring_offset;
  j["nodes_in"] = config.nodes_in;
  j["problem"] = config.problem;
  j["beta"] = config.beta;
  j["operator_kind"] = to_string(config.operator_kind);
  j["M"] = config.M;
  j["n_max"] = config.n_max;
  j["precondition"] = uses_preconditioner(config);
  j["heldout_n"] = config.heldout_n;
  j["grid_n"] = config.grid_n;
  return j.dump();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const ExperimentConfig& config) {
  return fmt::format("{:016x}", fnv1a64(canonical_json(config)));
}

}  // namespace frbf::app
