#pragma once

#include <vector>

#include "frbf/specfun.hpp"

namespace frbf {

/// Radial function sum_i c_i * r^{p_i} with real exponents.
///
/// Terms are kept sorted by strictly decreasing power; like powers are merged
/// on construction and zero coefficients are dropped. Kernels, tail profiles
/// and operator images all share this representation.
class MonomialSum {
 public:
  MonomialSum() = default;
  explicit MonomialSum(std::vector<MonomialTerm> terms);

  const std::vector<MonomialTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// sum c_i r^{p_i}. At r = 0 positive powers contribute 0 and a zero power
  /// contributes its coefficient.
  double operator()(double r) const;

  /// Classical k-th derivative, termwise.
  MonomialSum derivative(int order) const;

  MonomialSum scaled(double factor) const;

  friend MonomialSum operator+(const MonomialSum& a, const MonomialSum& b);

  /// Powers that differ by less than this are merged.
  static constexpr double kPowerTolerance = 1e-12;

 private:
  std::vector<MonomialTerm> terms_;
};

}  // namespace frbf
