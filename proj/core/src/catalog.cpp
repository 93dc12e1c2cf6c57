#include "frbf/catalog.hpp"

#include <cmath>

#include <fmt/format.h>

#include "frbf/errors.hpp"

namespace frbf {

namespace {

double sin8(const Eigen::Ref<const Eigen::VectorXd>& p) {
  const double x = p(0), y = p(1);
  return (std::sin(8 * (x + y)) + std::cos(8 * (x - y)) + 4.0) / 35.0;
}

double sin8_laplacian(const Eigen::Ref<const Eigen::VectorXd>& p) {
  const double x = p(0), y = p(1);
  return -128.0 / 35.0 * (std::sin(8 * (x + y)) + std::cos(8 * (x - y)));
}

double rational_cos(const Eigen::Ref<const Eigen::VectorXd>& p) {
  const double x = p(0), y = p(1);
  const double t = 3 * x - 1;
  return (std::cos(5.4 * y) + 1.25) / (6 * t * t + 6);
}

double rational_cos_laplacian(const Eigen::Ref<const Eigen::VectorXd>& p) {
  const double x = p(0), y = p(1);
  const double t = 3 * x - 1;
  const double denom = 6 * t * t + 6;
  const double dx = 108 * x - 36;
  return 2 * dx * dx * (std::cos(5.4 * y) + 1.25) / (denom * denom * denom) -
         (108 * std::cos(5.4 * y) + 135) / (denom * denom) -
         29.16 * std::cos(5.4 * y) / denom;
}

const std::vector<TestProblem>& catalog() {
  static const std::vector<TestProblem> problems = {
      {"sin8-interp", sin8, {}},
      {"rational-cos", rational_cos, rational_cos_laplacian},
      {"sin8-colloc", sin8, sin8_laplacian},
  };
  return problems;
}

}  // namespace

const TestProblem& find_problem(std::string_view name) {
  for (const auto& p : catalog()) {
    if (p.name == name) return p;
  }
  throw DomainError(fmt::format("unknown test problem '{}'", name));
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& p : catalog()) names.push_back(p.name);
  return names;
}

}  // namespace frbf
