#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include <frbf/errors.hpp>
#include <frbf/nodes.hpp>

#include "oracles.hpp"

namespace {

using frbf::Domain;
using frbf::NodeSet;

TEST(Halton, FirstValuesBaseTwoAndThree) {
  const Eigen::MatrixXd h = frbf::halton_points(3, 2);
  EXPECT_DOUBLE_EQ(h(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(h(1, 0), 0.25);
  EXPECT_DOUBLE_EQ(h(2, 0), 0.75);
  EXPECT_DOUBLE_EQ(h(0, 1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(h(1, 1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(h(2, 1), 1.0 / 9.0);
}

TEST(Halton, MatchesDigitExpansion) {
  constexpr unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  const int skip = 7;
  const Eigen::MatrixXd h = frbf::halton_points(300, 8, skip);
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (int j = 0; j < 8; ++j) {
      const double ref = oracle::van_der_corput(static_cast<std::uint64_t>(skip + i + 1),
                                                primes[j]);
      EXPECT_NEAR(h(i, j), ref, 1e-15);
      EXPECT_GT(h(i, j), 0.0);
      EXPECT_LT(h(i, j), 1.0);
    }
  }
}

TEST(Halton, EmptyAndDimensionLimit) {
  EXPECT_EQ(frbf::halton_points(0, 2).rows(), 0);
  EXPECT_THROW(frbf::halton_points(4, 9), frbf::DimensionError);
  EXPECT_DOUBLE_EQ(frbf::radical_inverse(6, 2), 0.375);
}

double star_discrepancy(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d = std::max({d, (i + 1) / n - x[i], x[i] - i / n});
  }
  return d;
}

TEST(Halton, DiscrepancyBound) {
  for (int n : {16, 64, 256}) {
    const Eigen::MatrixXd h = frbf::halton_points(n, 1);
    const std::vector<double> x(h.data(), h.data() + h.size());
    EXPECT_LE(star_discrepancy(x), (2.0 * std::log2(n) + 2.0) / n) << "n = " << n;
  }
}

TEST(NodeSet, CornersOnly) {
  const NodeSet nodes = frbf::make_node_set(Domain::square(0, 1), 0, 2);
  EXPECT_EQ(nodes.boundary_count(), 4);
  EXPECT_EQ(nodes.interior_count(), 0);
}

TEST(NodeSet, CornersAndMidpoints) {
  const NodeSet nodes = frbf::make_node_set(Domain::square(0, 1), 0, 3);
  ASSERT_EQ(nodes.boundary_count(), 8);
  int midpoints = 0;
  for (Eigen::Index i = 0; i < 8; ++i) {
    const double x = nodes.boundary(i, 0), y = nodes.boundary(i, 1);
    if (x == 0.5 || y == 0.5) ++midpoints;
  }
  EXPECT_EQ(midpoints, 4);
  EXPECT_EQ(frbf::boundary_node_count(2, 3), 8);
  EXPECT_EQ(frbf::boundary_node_count(2, 11), 40);
  EXPECT_EQ(frbf::boundary_node_count(3, 3), 26);
}

TEST(NodeSet, FirstInteriorPoint) {
  const NodeSet nodes = frbf::make_node_set(Domain::square(0.28, 1.48), 1, 0);
  ASSERT_EQ(nodes.interior_count(), 1);
  EXPECT_NEAR(nodes.interior(0, 0), 0.88, 1e-15);
  EXPECT_NEAR(nodes.interior(0, 1), 0.68, 1e-15);
}

TEST(NodeSet, PlacementInvariants) {
  const Domain domain = Domain::square(0.28, 1.48);
  const NodeSet nodes = frbf::make_node_set(domain, 100, 11);
  EXPECT_EQ(nodes.size(), 140);
  for (Eigen::Index i = 0; i < nodes.interior_count(); ++i) {
    const Eigen::VectorXd x = nodes.interior.row(i).transpose();
    EXPECT_TRUE(domain.contains(x));
    EXPECT_FALSE(domain.on_boundary(x));
  }
  for (Eigen::Index i = 0; i < nodes.boundary_count(); ++i) {
    const double x = nodes.boundary(i, 0), y = nodes.boundary(i, 1);
    EXPECT_TRUE(x == 0.28 || x == 1.48 || y == 0.28 || y == 1.48);
  }
  const Eigen::MatrixXd all = nodes.all();
  for (Eigen::Index i = 0; i < all.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < all.rows(); ++j) {
      EXPECT_GT((all.row(i) - all.row(j)).norm(), 1e-12);
    }
  }
  EXPECT_EQ(all.topRows(100), nodes.interior);
}

TEST(NodeSet, InsetAndRing) {
  const Domain domain = Domain::square(0, 1);
  frbf::NodeOptions options;
  options.inset_margin = 0.1;
  const NodeSet inset = frbf::make_node_set(
      domain, 50, 5, frbf::NodeLayout::halton_interior_cartesian_boundary, options);
  EXPECT_GE(inset.interior.minCoeff(), 0.1);
  EXPECT_LE(inset.interior.maxCoeff(), 0.9);

  options.inset_margin = 0.0;
  options.near_boundary_ring = true;
  options.ring_offset = 0.05;
  const NodeSet ring = frbf::make_node_set(
      domain, 50, 5, frbf::NodeLayout::halton_interior_cartesian_boundary, options);
  EXPECT_EQ(ring.interior_count(), 50 + 16);
  EXPECT_EQ(ring.boundary_count(), 16);
  EXPECT_DOUBLE_EQ(ring.interior(50, 0), 0.05);
}

TEST(NodeSet, CoincidentRingIsRejected) {
  frbf::NodeOptions options;
  options.near_boundary_ring = true;
  options.ring_offset = 0.0;
  EXPECT_THROW(frbf::make_node_set(Domain::square(0, 1), 4, 3,
                                   frbf::NodeLayout::halton_interior_cartesian_boundary,
                                   options),
               frbf::DuplicateNodeError);
}

TEST(NodeSet, CsvRoundTrip) {
  const NodeSet nodes = frbf::make_node_set(Domain::square(0.28, 1.48), 17, 4);
  std::stringstream buffer;
  frbf::write_nodes_csv(buffer, nodes);
  std::string header;
  std::getline(buffer, header);
  EXPECT_EQ(header, "x1,x2,kind");
  buffer.seekg(0);
  const NodeSet back = frbf::read_nodes_csv(buffer);
  EXPECT_EQ(back.interior, nodes.interior);
  EXPECT_EQ(back.boundary, nodes.boundary);
}

TEST(NodeSet, CsvErrors) {
  std::stringstream bad_kind("x1,x2,kind\n0.1,0.2,edge\n");
  EXPECT_THROW(frbf::read_nodes_csv(bad_kind), frbf::DomainError);
  std::stringstream duplicate("x1,x2,kind\n0.1,0.2,interior\n0.1,0.2,boundary\n");
  EXPECT_THROW(frbf::read_nodes_csv(duplicate), frbf::DuplicateNodeError);
}

TEST(Domain, ScaleAndMembership) {
  const Domain d(Eigen::Vector3d(0.0, -1.0, 0.5), Eigen::Vector3d(1.0, 2.5, 1.5));
  EXPECT_EQ(d.dim(), 3);
  EXPECT_EQ(d.scale(), 2.5);
  EXPECT_TRUE(d.contains(Eigen::Vector3d(0.5, 0.0, 1.0)));
  EXPECT_FALSE(d.contains(Eigen::Vector3d(1.5, 0.0, 1.0)));
  EXPECT_TRUE(d.on_boundary(Eigen::Vector3d(0.5, 2.5, 1.0)));
  EXPECT_THROW(Domain::square(1.0, 1.0), frbf::DomainError);
}

}  // namespace
