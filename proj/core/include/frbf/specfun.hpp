#pragma once

namespace frbf {

enum class DerivativeKind { riemann_liouville, caputo };

/// One term c * r^p of a radial monomial sum.
struct MonomialTerm {
  double coefficient = 0.0;
  double power = 0.0;

  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

/// Gamma function. Lanczos approximation on [1, 2] with upward recurrence for
/// larger arguments and the reflection formula for negative ones.
///
/// Throws PoleError for x in {0, -1, -2, ...} and OverflowError when the
/// result does not fit in a double.
double gamma(double x);

/// True when x is (numerically) one of 0, -1, -2, ...
bool is_gamma_pole(double x) noexcept;

/// Fractional derivative of order `alpha` (lower limit 0) of r^s:
///   D^alpha r^s = Gamma(s+1) / Gamma(s-alpha+1) * r^(s-alpha).
///
/// Negative alpha gives the Riemann-Liouville fractional integral. The Caputo
/// kind requires s > ceil(alpha) - 1 when alpha > 0, where both definitions
/// agree on r^s. s = 0 is accepted for the Riemann-Liouville kind only.
///
/// Throws DomainError for s < 0 or a failed Caputo precondition, and
/// PoleError when Gamma(s+1) or Gamma(s-alpha+1) hits a pole.
MonomialTerm frac_deriv_monomial(double s, double alpha, DerivativeKind kind);

}  // namespace frbf
