#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace frbf {

using ScalarField = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

/// Built-in 2D test problems.
///   sin8-interp   u = (sin(8(x+y)) + cos(8(x-y)) + 4) / 35, interpolation target
///   rational-cos  g = (cos(5.4y) + 1.25) / (6(3x-1)^2 + 6), f = Laplacian of g
///   sin8-colloc   g = u above, f = -128/35 (sin(8(x+y)) + cos(8(x-y)))
struct TestProblem {
  std::string name;
  /// Data / boundary values.
  ScalarField g;
  /// Source term; empty for interpolation targets.
  ScalarField f;
};

const TestProblem& find_problem(std::string_view name);
std::vector<std::string> problem_names();

}  // namespace frbf
