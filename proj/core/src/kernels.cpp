#include "frbf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "frbf/errors.hpp"

namespace frbf {

namespace {

constexpr double kIntegerTolerance = 1e-9;

int term_count(Family family) {
  switch (family) {
    case Family::two_term:
      return 2;
    case Family::three_term_tps:
    case Family::false_tps:
      return 3;
    case Family::four_term:
      return 4;
  }
  return 0;
}

// Index (into descending-power terms) of the highest-power term with a
// negative coefficient.
std::size_t perturbation_target(const MonomialSum& kernel) {
  const auto& terms = kernel.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 0.0) return i;
  }
  throw NoNegativeTermError("kernel has no negative-coefficient term");
}

// Discrete check that Phi(2.01, r) on (0, 1) stays below the chord joining
// its end values, i.e. it dips like r^N log r does.
bool dips_below_chord(Family family, double c0) {
  KernelSpec probe{.family = family, .N = 2.01, .b = 1.0, .c0 = c0};
  const MonomialSum phi = make_kernel(probe);
  const double left = phi(0.0);
  const double right = phi(1.0);
  constexpr int kSamples = 64;
  for (int i = 1; i <= kSamples; ++i) {
    const double r = static_cast<double>(i) / (kSamples + 1);
    const double chord = (1.0 - r) * left + r * right;
    if (phi(r) > chord + 1e-14) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::two_term:
      return "two_term";
    case Family::three_term_tps:
      return "three_term_tps";
    case Family::false_tps:
      return "false_tps";
    case Family::four_term:
      return "four_term";
  }
  return "?";
}

std::string_view to_string(FracMode mode) {
  switch (mode) {
    case FracMode::none:
      return "none";
    case FracMode::exponent_shift:
      return "exponent_shift";
    case FracMode::partial_fractional:
      return "partial_fractional";
    case FracMode::full_fractional:
      return "full_fractional";
  }
  return "?";
}

std::string_view to_string(DerivativeKind kind) {
  return kind == DerivativeKind::caputo ? "caputo" : "riemann_liouville";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::two_term, Family::three_term_tps, Family::false_tps,
                   Family::four_term}) {
    if (name == to_string(f)) return f;
  }
  throw DomainError(fmt::format("unknown kernel family '{}'", name));
}

FracMode parse_frac_mode(std::string_view name) {
  for (FracMode m : {FracMode::none, FracMode::exponent_shift,
                     FracMode::partial_fractional, FracMode::full_fractional}) {
    if (name == to_string(m)) return m;
  }
  throw DomainError(fmt::format("unknown fractional mode '{}'", name));
}

DerivativeKind parse_derivative_kind(std::string_view name) {
  if (name == "caputo") return DerivativeKind::caputo;
  if (name == "riemann_liouville" || name == "rl") {
    return DerivativeKind::riemann_liouville;
  }
  throw DomainError(fmt::format("unknown derivative kind '{}'", name));
}

bool is_natural(double x) noexcept {
  const double nearest = std::round(x);
  return nearest >= 0.0 && std::abs(x - nearest) < kIntegerTolerance;
}

Eigen::MatrixXd condition_matrix(std::span<const double> powers,
                                 std::span<const int> derivative_orders,
                                 double b) {
  const auto rows = static_cast<Eigen::Index>(derivative_orders.size());
  const auto cols = static_cast<Eigen::Index>(powers.size());
  Eigen::MatrixXd B(rows, cols);
  for (Eigen::Index k = 0; k < rows; ++k) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double coefficient = 1.0;
      double power = powers[j];
      for (int o = 0; o < derivative_orders[k]; ++o) {
        coefficient *= power;
        power -= 1.0;
      }
      B(k, j) = coefficient * std::pow(b, power);
    }
  }
  return B;
}

std::vector<double> solve_coefficients(std::span<const double> powers,
                                       std::span<const int> derivative_orders,
                                       std::span<const double> rhs, double b) {
  if (powers.size() != derivative_orders.size() || powers.size() != rhs.size()) {
    throw LengthMismatchError(
        "solve_coefficients: powers, orders and rhs differ in length");
  }
  if (!(b > 0.0)) {
    throw SingularSystemError("solve_coefficients: scale b must be positive");
  }
  const Eigen::MatrixXd B = condition_matrix(powers, derivative_orders, b);
  // Column equilibration: entries scale like b^{p_j}, which can span many
  // orders of magnitude.
  const Eigen::VectorXd column_scale =
      B.colwise().lpNorm<Eigen::Infinity>().transpose();
  if ((column_scale.array() == 0.0).any()) {
    throw SingularSystemError("solve_coefficients: zero column");
  }
  const Eigen::MatrixXd scaled = B * column_scale.cwiseInverse().asDiagonal();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(scaled);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) {
    throw SingularSystemError(
        "solve_coefficients: condition matrix is numerically singular");
  }
  const Eigen::Map<const Eigen::VectorXd> c(rhs.data(),
                                            static_cast<Eigen::Index>(rhs.size()));
  const Eigen::VectorXd a = lu.solve(c).cwiseQuotient(column_scale);
  return {a.data(), a.data() + a.size()};
}

std::vector<double> family_powers(Family family, double N) {
  const int count = term_count(family);
  std::vector<double> powers;
  powers.reserve(count);
  for (int k = count - 1; k >= 0; --k) powers.push_back(N + k);
  return powers;
}

std::vector<double> family_rhs(Family family, double N, double c0) {
  switch (family) {
    case Family::two_term:
      return {0.0, c0};
    case Family::three_term_tps:
      return {0.0, 1.0, 2.0 * N - 1.0};
    case Family::false_tps:
      return {0.0, 0.0, -c0};
    case Family::four_term:
      return {0.0, 0.0, 0.0, c0};
  }
  return {};
}

double default_c0(Family family) {
  double magnitude = 0.0;
  switch (family) {
    case Family::two_term:
      magnitude = 1.0;
      break;
    case Family::false_tps:
      // lcm of the denominators is 2; doubled to keep integer coefficients.
      magnitude = 4.0;
      break;
    case Family::four_term:
      // 3 * lcm(2, 6).
      magnitude = 18.0;
      break;
    case Family::three_term_tps:
      throw DomainError("three_term_tps has no free c0");
  }
  return dips_below_chord(family, magnitude) ? magnitude : -magnitude;
}

double effective_c0(const KernelSpec& spec) {
  if (spec.family == Family::three_term_tps) return 0.0;
  return spec.c0 ? *spec.c0 : default_c0(spec.family);
}

MonomialSum make_kernel(const KernelSpec& spec) {
  const double N = spec.N;
  const double b = spec.b;
  if (is_natural(N)) {
    throw RestrictionError(fmt::format("N = {} is a natural number", N));
  }
  if (spec.frac_mode != FracMode::none && is_natural(N - spec.alpha)) {
    throw RestrictionError(
        fmt::format("N - alpha = {} is a natural number", N - spec.alpha));
  }
  const double c0 = effective_c0(spec);
  const auto bp = [b](double e) { return std::pow(b, e); };
  switch (spec.family) {
    case Family::two_term:
      return MonomialSum({{c0 * bp(-N), N + 1}, {-c0 * bp(1 - N), N}});
    case Family::three_term_tps:
      return MonomialSum({
          {0.5 * (2 * N - 1) * bp(-N) - N * bp(-N - 1), N + 2},
          {(2 * N + 1) * bp(-N) - (2 * N - 1) * bp(1 - N), N + 1},
          {0.5 * (2 * N - 1) * bp(2 - N) - (N + 1) * bp(1 - N), N},
      });
    case Family::false_tps:
      return MonomialSum({{-0.5 * c0 * bp(-N), N + 2},
                          {c0 * bp(1 - N), N + 1},
                          {-0.5 * c0 * bp(2 - N), N}});
    case Family::four_term:
      return MonomialSum({{c0 / 6.0 * bp(-N), N + 3},
                          {-c0 / 2.0 * bp(1 - N), N + 2},
                          {c0 / 2.0 * bp(2 - N), N + 1},
                          {-c0 / 6.0 * bp(3 - N), N}});
  }
  return {};
}

MonomialSum perturb(const MonomialSum& kernel, double alpha, double b) {
  const std::size_t target = perturbation_target(kernel);
  if (alpha == 0.0) return kernel;
  std::vector<MonomialTerm> terms = kernel.terms();
  terms[target].power -= alpha;
  terms[target].coefficient *= std::pow(b, alpha);
  return MonomialSum(std::move(terms));
}

MonomialSum fractionalize(const KernelSpec& spec) {
  if (spec.frac_mode != FracMode::partial_fractional &&
      spec.frac_mode != FracMode::full_fractional) {
    throw DomainError("fractionalize: frac_mode must be partial or full");
  }
  const MonomialSum base = make_kernel(spec);
  std::vector<MonomialTerm> terms = base.terms();
  const double scale = std::pow(spec.b, spec.alpha);
  const auto apply = [&](MonomialTerm& term) {
    const MonomialTerm d =
        frac_deriv_monomial(term.power, spec.alpha, spec.frac_kind);
    term.coefficient *= scale * d.coefficient;
    term.power = d.power;
  };
  if (spec.frac_mode == FracMode::partial_fractional) {
    apply(terms[perturbation_target(base)]);
  } else {
    std::for_each(terms.begin(), terms.end(), apply);
  }
  for (const auto& t : terms) {
    if (!(t.power > 0.0)) {
      throw RestrictionError(fmt::format(
          "fractional kernel has non-positive power {} (alpha = {})", t.power,
          spec.alpha));
    }
  }
  return MonomialSum(std::move(terms));
}

MonomialSum build_kernel(const KernelSpec& spec) {
  validate_spec(spec);
  switch (spec.frac_mode) {
    case FracMode::none:
      return make_kernel(spec);
    case FracMode::exponent_shift:
      return perturb(make_kernel(spec), spec.alpha, spec.b);
    case FracMode::partial_fractional:
    case FracMode::full_fractional:
      return fractionalize(spec);
  }
  return {};
}

double evaluate(const MonomialSum& kernel, double r) { return kernel(r); }

int cpd_order(const MonomialSum& kernel) {
  int m = 0;
  for (const auto& t : kernel.terms()) {
    if (is_natural(t.power)) {
      throw RestrictionError(
          fmt::format("cpd_order: integer power {} in kernel", t.power));
    }
    m = std::max(m, static_cast<int>(std::ceil(t.power / 2.0)));
  }
  return m;
}

int cpd_order_over_alpha_range(const KernelSpec& spec, double alpha_lo,
                               double alpha_hi) {
  if (alpha_lo > alpha_hi) {
    throw DomainError("cpd_order_over_alpha_range: empty alpha range");
  }
  KernelSpec base = spec;
  base.frac_mode = FracMode::none;
  const MonomialSum kernel = make_kernel(base);
  std::vector<double> powers;
  for (const auto& t : kernel.terms()) powers.push_back(t.power);
  switch (spec.frac_mode) {
    case FracMode::none:
      break;
    case FracMode::exponent_shift:
    case FracMode::partial_fractional:
      powers[perturbation_target(kernel)] -= alpha_lo;
      break;
    case FracMode::full_fractional:
      for (double& p : powers) p -= alpha_lo;
      break;
  }
  int m = 0;
  for (double p : powers) {
    m = std::max(m, static_cast<int>(std::ceil(p / 2.0 - 1e-12)));
  }
  return m;
}

void validate_restrictions(const KernelSpec& spec, double q) {
  const double alpha = spec.frac_mode == FracMode::none ? 0.0 : spec.alpha;
  if (is_natural(spec.N)) {
    throw RestrictionError(
        fmt::format("restriction N not in naturals violated: N = {}", spec.N));
  }
  if (is_natural(spec.N - alpha)) {
    throw RestrictionError(fmt::format(
        "restriction N - alpha not in naturals violated: N - alpha = {}",
        spec.N - alpha));
  }
  if (q > 0.0) {
    if (!(spec.N > q + alpha)) {
      throw RestrictionError(fmt::format(
          "restriction N > q + alpha violated: N = {}, q + alpha = {}", spec.N,
          q + alpha));
    }
  } else if (!(spec.N > alpha)) {
    throw RestrictionError(fmt::format(
        "restriction N > alpha violated: N = {}, alpha = {}", spec.N, alpha));
  }
}

void validate_spec(const KernelSpec& spec) {
  if (!(spec.b > 0.0)) {
    throw RestrictionError(fmt::format("scale b must be positive, got {}", spec.b));
  }
  if (!(spec.N > 0.0)) {
    throw RestrictionError(fmt::format("N must be positive, got {}", spec.N));
  }
  const double a = spec.alpha;
  switch (spec.frac_mode) {
    case FracMode::none:
      break;
    case FracMode::exponent_shift:
      if (!(a >= 0.0 && a < 1.0)) {
        throw RestrictionError(
            fmt::format("exponent_shift needs alpha in [0, 1), got {}", a));
      }
      break;
    case FracMode::partial_fractional:
      if (!(a > -1.0 && a < 1.0)) {
        throw RestrictionError(
            fmt::format("partial_fractional needs alpha in (-1, 1), got {}", a));
      }
      break;
    case FracMode::full_fractional:
      if (!(a > -2.0 && a < 2.0)) {
        throw RestrictionError(
            fmt::format("full_fractional needs alpha in (-2, 2), got {}", a));
      }
      break;
  }
  validate_restrictions(spec, 0.0);
}

}  // namespace frbf
