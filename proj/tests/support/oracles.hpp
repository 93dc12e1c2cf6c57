#pragma once

// Reference computations that share no code with the library.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using hp = boost::multiprecision::cpp_bin_float_50;

/// Gamma(x) in 50-digit arithmetic.
inline hp gamma(double x) { return boost::math::tgamma(hp(x)); }

/// Gamma(a) / Gamma(b) rounded once to double.
inline double gamma_ratio(double a, double b) {
  return static_cast<double>(gamma(a) / gamma(b));
}

/// c * r^p in 50-digit arithmetic.
inline double power_term(double c, double r, double p) {
  return static_cast<double>(hp(c) * boost::multiprecision::pow(hp(r), hp(p)));
}

inline double relative_error(double value, double reference) {
  if (reference == 0.0) return std::abs(value);
  return std::abs(value - reference) / std::abs(reference);
}

/// Gaussian elimination with partial pivoting, written out for 3x3.
inline std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> a,
                                    std::array<double, 3> b) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int row = col + 1; row < 3; ++row) {
      const double f = a[row][col] / a[col][col];
      for (int k = col; k < 3; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::array<double, 3> x{};
  for (int row = 2; row >= 0; --row) {
    double s = b[row];
    for (int k = row + 1; k < 3; ++k) s -= a[row][k] * x[k];
    x[row] = s / a[row][row];
  }
  return x;
}

/// Five-point finite-difference Laplacian in 2D, fourth order.
inline double laplacian_fd(const std::function<double(double, double)>& u,
                           double x, double y, double h = 1e-3) {
  const auto d2 = [&](double m2, double m1, double c, double p1, double p2) {
    return (-p2 + 16 * p1 - 30 * c + 16 * m1 - m2) / (12 * h * h);
  };
  const double c = u(x, y);
  return d2(u(x - 2 * h, y), u(x - h, y), c, u(x + h, y), u(x + 2 * h, y)) +
         d2(u(x, y - 2 * h), u(x, y - h), c, u(x, y + h), u(x, y + 2 * h));
}

/// Radical inverse by repeated digit extraction.
inline double van_der_corput(std::uint64_t i, unsigned base) {
  double result = 0.0;
  double weight = 1.0;
  while (i > 0) {
    weight /= base;
    result += weight * static_cast<double>(i % base);
    i /= base;
  }
  return result;
}

}  // namespace oracle
