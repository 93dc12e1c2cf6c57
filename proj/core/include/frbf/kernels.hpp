#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "frbf/monomial_sum.hpp"
#include "frbf/specfun.hpp"

namespace frbf {

/// Polynomial kernel families that mimic r^N log r on [0, b].
///   two_term        a1 r^{N+1} + a0 r^N        with Phi(b)=0, Phi'(b)=c0
///   three_term_tps  three powers               with Phi(b)=0, Phi'(b)=1, Phi''(b)=2N-1
///   false_tps       three powers               with Phi(b)=Phi'(b)=0, Phi''(b)=-c0
///   four_term       four powers                with Phi(b)=Phi'(b)=Phi''(b)=0, Phi'''(b)=c0
enum class Family { two_term, three_term_tps, false_tps, four_term };

enum class FracMode { none, exponent_shift, partial_fractional, full_fractional };

struct KernelSpec {
  Family family = Family::false_tps;
  double N = 3.22;
  double alpha = 0.0;
  /// Domain scale; the kernel vanishes at r = b.
  double b = 1.0;
  /// Unset means default_c0(family).
  std::optional<double> c0;
  FracMode frac_mode = FracMode::none;
  DerivativeKind frac_kind = DerivativeKind::riemann_liouville;
};

std::string_view to_string(Family family);
std::string_view to_string(FracMode mode);
std::string_view to_string(DerivativeKind kind);
Family parse_family(std::string_view name);
FracMode parse_frac_mode(std::string_view name);
DerivativeKind parse_derivative_kind(std::string_view name);

/// True when x is within 1e-9 of a non-negative integer.
bool is_natural(double x) noexcept;

/// Matrix of the boundary-condition system: row k, column j holds the
/// o_k-th derivative of r^{p_j} at r = b.
Eigen::MatrixXd condition_matrix(std::span<const double> powers,
                                 std::span<const int> derivative_orders,
                                 double b);

/// Solves condition_matrix(powers, orders, b) * a = rhs.
/// Throws SingularSystemError for b = 0 or repeated powers.
std::vector<double> solve_coefficients(std::span<const double> powers,
                                       std::span<const int> derivative_orders,
                                       std::span<const double> rhs, double b);

/// Exponents N+k, ..., N+1, N of the family, highest first.
std::vector<double> family_powers(Family family, double N);

/// Right-hand side of the family's boundary-condition system at derivative
/// orders 0, 1, ..., k.
std::vector<double> family_rhs(Family family, double N, double c0);

double default_c0(Family family);

/// c0 of the spec, or the family default.
double effective_c0(const KernelSpec& spec);

/// Closed-form unperturbed kernel of the family (alpha and frac_mode ignored).
/// Throws RestrictionError when N or N - alpha is a natural number.
MonomialSum make_kernel(const KernelSpec& spec);

/// Shifts the exponent of the highest-power negative-coefficient term down by
/// alpha and multiplies its coefficient by b^alpha.
MonomialSum perturb(const MonomialSum& kernel, double alpha, double b);

/// partial_fractional: b^alpha D^alpha applied to the term that perturb would
/// shift. full_fractional: b^alpha D^alpha applied to every term.
MonomialSum fractionalize(const KernelSpec& spec);

/// Validates the spec and returns the kernel its frac_mode describes.
MonomialSum build_kernel(const KernelSpec& spec);

double evaluate(const MonomialSum& kernel, double r);

/// Conditionally-positive-definite order max_i ceil(p_i / 2).
/// Throws RestrictionError when a power is an integer.
int cpd_order(const MonomialSum& kernel);

/// Order that covers every alpha in [alpha_lo, alpha_hi] (either end may be
/// open). Powers decrease with alpha, so the bound is attained at alpha_lo.
int cpd_order_over_alpha_range(const KernelSpec& spec, double alpha_lo,
                               double alpha_hi);

/// N and N - alpha must not be natural numbers; N > q + alpha for q > 0 and
/// N > alpha otherwise. Throws RestrictionError naming the violated clause.
void validate_restrictions(const KernelSpec& spec, double q);

/// b > 0, N > 0, the alpha range of the fractional mode, and
/// validate_restrictions(spec, 0).
void validate_spec(const KernelSpec& spec);

}  // namespace frbf
