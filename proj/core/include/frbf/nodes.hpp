#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace frbf {

/// Axis-aligned box [lower_1, upper_1] x ... x [lower_d, upper_d].
class Domain {
 public:
  Domain(Eigen::VectorXd lower, Eigen::VectorXd upper);

  /// [a, b]^d.
  static Domain square(double a, double b, int d = 2);

  const Eigen::VectorXd& lower() const noexcept { return lower_; }
  const Eigen::VectorXd& upper() const noexcept { return upper_; }
  int dim() const noexcept { return static_cast<int>(lower_.size()); }

  /// Kernel scale: the largest upper bound.
  double scale() const noexcept { return upper_.maxCoeff(); }

  bool contains(const Eigen::Ref<const Eigen::VectorXd>& x,
                double tol = 0.0) const;
  bool on_boundary(const Eigen::Ref<const Eigen::VectorXd>& x) const;

 private:
  Eigen::VectorXd lower_;
  Eigen::VectorXd upper_;
};

/// Interior and boundary nodes, one point per row. The combined ordering
/// used everywhere is interior first, then boundary.
struct NodeSet {
  Eigen::MatrixXd interior;
  Eigen::MatrixXd boundary;

  Eigen::Index interior_count() const noexcept { return interior.rows(); }
  Eigen::Index boundary_count() const noexcept { return boundary.rows(); }
  Eigen::Index size() const noexcept { return interior.rows() + boundary.rows(); }
  int dim() const noexcept {
    return static_cast<int>(interior.rows() ? interior.cols() : boundary.cols());
  }

  Eigen::MatrixXd all() const;
};

enum class NodeLayout { halton_interior_cartesian_boundary };

struct NodeOptions {
  int halton_skip = 0;
  /// Interior Halton points are mapped into the box shrunk by this fraction
  /// of each side length.
  double inset_margin = 0.0;
  /// Adds a Cartesian ring of interior nodes at this fraction of the side
  /// length inside the boundary.
  bool near_boundary_ring = false;
  double ring_offset = 0.02;
};

/// Radical inverse of `index` in `base`.
double radical_inverse(unsigned long long index, unsigned base);

/// Halton points in (0, 1)^d: row i, column j is the radical inverse of
/// skip + i + 1 in the j-th prime base. Throws DimensionError for d > 8.
Eigen::MatrixXd halton_points(int n, int d, int skip = 0);

/// Halton interior plus equally spaced boundary nodes with
/// `boundary_per_side` points along each edge (corners counted once).
/// Throws DuplicateNodeError if two nodes coincide.
NodeSet make_node_set(const Domain& domain, int n_interior,
                      int boundary_per_side,
                      NodeLayout layout = NodeLayout::halton_interior_cartesian_boundary,
                      const NodeOptions& options = {});

/// Number of boundary lattice points for `per_side` points per edge in d
/// dimensions.
int boundary_node_count(int d, int per_side);

/// CSV with header x1,...,xd,kind and kind in {interior, boundary}.
void write_nodes_csv(std::ostream& out, const NodeSet& nodes);
NodeSet read_nodes_csv(std::istream& in);

}  // namespace frbf
