#ifndef POINCARE_GRID_HPP
#define POINCARE_GRID_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poincare/minkowski.hpp"

namespace poincare {

using Vec3 = Eigen::Vector3d;

/// Gauss-Legendre nodes and weights on [a, b].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b);

/// Unit directions and weights summing to 1 (so 4 pi w integrates over the sphere).
struct AngularRule {
  std::string name;
  std::vector<Vec3> directions;
  std::vector<double> weights;
  int polar = 0;    // product rules only: number of cos(theta) nodes
  int azimuth = 0;  // product rules only: number of phi nodes
  std::vector<double> rings;  // product rules only: cos(theta) nodes, increasing

  std::size_t size() const { return directions.size(); }
  bool product() const { return polar > 0; }
};

/// "lebedev26", "lebedev50" or "product:NTxNP" (NT Gauss-Legendre nodes in cos(theta),
/// NP uniform azimuths; NP must be even so that the rule is closed under p -> -p).
AngularRule make_angular_rule(const std::string& spec);

struct GridSpec {
  double mass = 1.0;  // 0 gives a grid on the forward light cone
  double p_max = 6.0;
  int radial = 32;
  std::string angular = "lebedev26";
};

/// Quadrature on the mass shell for d^3p/(2 p^0). Node index = radial * angular.size() + angular.
class MomentumGrid {
 public:
  explicit MomentumGrid(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  double mass() const { return spec_.mass; }
  std::size_t size() const { return nodes_.size(); }
  const FourVector& node(std::size_t k) const { return nodes_[k]; }
  double weight(std::size_t k) const { return weights_[k]; }
  const std::vector<FourVector>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& radii() const { return radii_; }
  const AngularRule& angular() const { return angular_; }

  /// Index of the node equal to p within `tolerance` (relative to |p|), if any.
  std::optional<std::size_t> find(const FourVector& p, double tolerance = 1e-10) const;
  /// Index of the node with spatial momentum -p.
  std::optional<std::size_t> mirror(std::size_t k) const;

  /// Linear weights (node, coefficient) approximating a smooth function at an off-grid p.
  /// Radial: 4-point Lagrange in |p| (zero beyond p_max).
  /// Angular: 4x4-point Lagrange in (cos theta, phi) on product rules; least-squares spherical
  /// polynomial fit (degree 3 on 26 points, 5 on 50 points) on Lebedev rules.
  std::vector<std::pair<std::size_t, double>> stencil(const FourVector& p) const;

  friend bool operator==(const MomentumGrid& a, const MomentumGrid& b);

 private:
  std::vector<std::pair<std::size_t, double>> angular_stencil(const Vec3& n) const;

  GridSpec spec_;
  AngularRule angular_;
  std::vector<double> radii_;
  std::vector<double> rings_;
  std::vector<FourVector> nodes_;
  std::vector<double> weights_;
  Eigen::MatrixXd fit_;  // Lebedev: maps node values to polynomial coefficients
  int fit_degree_ = 0;
};

Vec3 spatial(const FourVector& p);

}  // namespace poincare

#endif  // POINCARE_GRID_HPP
