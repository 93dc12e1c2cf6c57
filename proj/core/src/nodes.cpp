#include "frbf/nodes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "frbf/errors.hpp"

namespace frbf {

namespace {

constexpr std::array<unsigned, 8> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19};
constexpr double kDuplicateDistance = 1e-12;

Eigen::MatrixXd stack_rows(const std::vector<Eigen::VectorXd>& rows, int d) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return out;
}

// Lattice points of `per_side`^d on the surface of [lo, hi], in
// lexicographic order (last coordinate fastest).
std::vector<Eigen::VectorXd> surface_lattice(const Eigen::VectorXd& lo,
                                             const Eigen::VectorXd& hi,
                                             int per_side) {
  const auto d = lo.size();
  std::vector<Eigen::VectorXd> points;
  if (per_side <= 0) return points;
  if (per_side == 1) {
    // Degenerate request: a single point per edge is the lower corner.
    points.push_back(lo);
    return points;
  }
  std::vector<int> index(static_cast<std::size_t>(d), 0);
  while (true) {
    bool on_face = false;
    Eigen::VectorXd x(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const int k = index[static_cast<std::size_t>(j)];
      on_face = on_face || k == 0 || k == per_side - 1;
      // Exact face values at the ends.
      if (k == 0) {
        x(j) = lo(j);
      } else if (k == per_side - 1) {
        x(j) = hi(j);
      } else {
        x(j) = lo(j) + (hi(j) - lo(j)) * k / (per_side - 1);
      }
    }
    if (on_face) points.push_back(std::move(x));
    Eigen::Index j = d - 1;
    while (j >= 0 && ++index[static_cast<std::size_t>(j)] == per_side) {
      index[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return points;
}

void check_distinct(const Eigen::MatrixXd& points) {
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < points.rows(); ++j) {
      if ((points.row(i) - points.row(j)).norm() <= kDuplicateDistance) {
        throw DuplicateNodeError(
            fmt::format("nodes {} and {} coincide", i, j));
      }
    }
  }
}

}  // namespace

Domain::Domain(Eigen::VectorXd lower, Eigen::VectorXd upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size() || lower_.size() == 0) {
    throw DimensionError("domain bounds must have equal, non-zero length");
  }
  if ((lower_.array() >= upper_.array()).any()) {
    throw DomainError("domain needs lower < upper in every coordinate");
  }
}

Domain Domain::square(double a, double b, int d) {
  return Domain(Eigen::VectorXd::Constant(d, a), Eigen::VectorXd::Constant(d, b));
}

bool Domain::contains(const Eigen::Ref<const Eigen::VectorXd>& x,
                      double tol) const {
  return ((x.array() >= lower_.array() - tol) &&
          (x.array() <= upper_.array() + tol))
      .all();
}

bool Domain::on_boundary(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return contains(x) &&
         ((x.array() == lower_.array()) || (x.array() == upper_.array())).any();
}

Eigen::MatrixXd NodeSet::all() const {
  Eigen::MatrixXd out(size(), dim());
  if (interior.rows()) out.topRows(interior.rows()) = interior;
  if (boundary.rows()) out.bottomRows(boundary.rows()) = boundary;
  return out;
}

double radical_inverse(unsigned long long index, unsigned base) {
  double result = 0.0;
  double fraction = 1.0 / base;
  while (index > 0) {
    result += static_cast<double>(index % base) * fraction;
    index /= base;
    fraction /= base;
  }
  return result;
}

Eigen::MatrixXd halton_points(int n, int d, int skip) {
  if (d < 1 || d > static_cast<int>(kPrimes.size())) {
    throw DimensionError(fmt::format("halton_points supports 1 <= d <= 8, got {}", d));
  }
  if (n < 0 || skip < 0) {
    throw DomainError("halton_points needs non-negative n and skip");
  }
  Eigen::MatrixXd points(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      points(i, j) = radical_inverse(
          static_cast<unsigned long long>(skip) + static_cast<unsigned>(i) + 1,
          kPrimes[static_cast<std::size_t>(j)]);
    }
  }
  return points;
}

int boundary_node_count(int d, int per_side) {
  if (per_side <= 0) return 0;
  if (per_side == 1) return 1;
  const double total = std::pow(per_side, d);
  const double inner = std::pow(per_side - 2, d);
  return static_cast<int>(total - inner);
}

NodeSet make_node_set(const Domain& domain, int n_interior,
                      int boundary_per_side, NodeLayout /*layout*/,
                      const NodeOptions& options) {
  if (n_interior < 0 || boundary_per_side < 0) {
    throw DomainError("node counts must be non-negative");
  }
  const int d = domain.dim();
  const Eigen::VectorXd side = domain.upper() - domain.lower();
  const Eigen::VectorXd inner_lo = domain.lower() + options.inset_margin * side;
  const Eigen::VectorXd inner_side = (1.0 - 2.0 * options.inset_margin) * side;

  const Eigen::MatrixXd unit = halton_points(n_interior, d, options.halton_skip);
  std::vector<Eigen::VectorXd> interior;
  interior.reserve(static_cast<std::size_t>(n_interior));
  for (Eigen::Index i = 0; i < unit.rows(); ++i) {
    interior.emplace_back(inner_lo + inner_side.cwiseProduct(unit.row(i).transpose()));
  }
  if (options.near_boundary_ring && boundary_per_side >= 2) {
    const Eigen::VectorXd offset = options.ring_offset * side;
    for (auto& p : surface_lattice(domain.lower() + offset,
                                   domain.upper() - offset, boundary_per_side)) {
      interior.push_back(std::move(p));
    }
  }

  NodeSet nodes;
  nodes.interior = stack_rows(interior, d);
  nodes.boundary = stack_rows(
      surface_lattice(domain.lower(), domain.upper(), boundary_per_side), d);
  check_distinct(nodes.all());
  return nodes;
}

void write_nodes_csv(std::ostream& out, const NodeSet& nodes) {
  const int d = nodes.dim();
  for (int j = 0; j < d; ++j) out << (j ? "," : "") << 'x' << (j + 1);
  out << ",kind\n";
  const auto emit = [&](const Eigen::MatrixXd& points, const char* kind) {
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      for (int j = 0; j < d; ++j) {
        out << (j ? "," : "") << fmt::format("{:.17g}", points(i, j));
      }
      out << ',' << kind << '\n';
    }
  };
  emit(nodes.interior, "interior");
  emit(nodes.boundary, "boundary");
}

NodeSet read_nodes_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw DomainError("node CSV is empty");
  }
  const auto columns = std::count(line.begin(), line.end(), ',') + 1;
  const int d = static_cast<int>(columns) - 1;
  if (d < 1) throw DimensionError("node CSV needs at least one coordinate");

  std::vector<Eigen::VectorXd> interior;
  std::vector<Eigen::VectorXd> boundary;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    Eigen::VectorXd x(d);
    for (int j = 0; j < d; ++j) {
      if (!std::getline(row, cell, ',')) {
        throw DomainError(fmt::format("node CSV line {}: too few columns", line_no));
      }
      x(j) = std::stod(cell);
    }
    std::getline(row, cell);
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    if (cell == "interior") {
      interior.push_back(std::move(x));
    } else if (cell == "boundary") {
      boundary.push_back(std::move(x));
    } else {
      throw DomainError(fmt::format("node CSV line {}: unknown kind '{}'", line_no, cell));
    }
  }
  NodeSet nodes{stack_rows(interior, d), stack_rows(boundary, d)};
  check_distinct(nodes.all());
  return nodes;
}

}  // namespace frbf
