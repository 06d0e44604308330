#include "poincare/grid.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <regex>

#include <gsl/gsl_integration.h>

namespace poincare {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)), &gsl_integration_glfixed_table_free);
  if (!table) throw std::runtime_error("gauss_legendre: allocation failed");
  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &x[i], &w[i], table.get());
  }
  // GSL returns the nodes in no guaranteed order
  std::vector<std::size_t> order(x.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  std::vector<double> xs;
  std::vector<double> ws;
  for (std::size_t i : order) {
    xs.push_back(x[i]);
    ws.push_back(w[i]);
  }
  return {xs, ws};
}

namespace {

void add_orbit(AngularRule& rule, const Vec3& v, double w) {
  // all sign changes and coordinate permutations of v, deduplicated
  std::array<int, 3> perm{0, 1, 2};
  std::vector<Vec3> found;
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Vec3 u;
      for (int k = 0; k < 3; ++k) u[k] = ((signs >> k) & 1 ? -1.0 : 1.0) * v[perm[k]];
      bool dup = false;
      for (const Vec3& f : found) dup = dup || (f - u).norm() < 1e-14;
      if (!dup) found.push_back(u);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const Vec3& u : found) {
    rule.directions.push_back(u);
    rule.weights.push_back(w);
  }
}

AngularRule lebedev26() {
  AngularRule r;
  r.name = "lebedev26";
  const double a = 1.0 / std::sqrt(2.0);
  const double b = 1.0 / std::sqrt(3.0);
  add_orbit(r, Vec3(1, 0, 0), 1.0 / 21.0);
  add_orbit(r, Vec3(a, a, 0), 4.0 / 105.0);
  add_orbit(r, Vec3(b, b, b), 9.0 / 280.0);
  return r;
}

AngularRule lebedev50() {
  AngularRule r;
  r.name = "lebedev50";
  const double a = 1.0 / std::sqrt(2.0);
  const double b = 1.0 / std::sqrt(3.0);
  const double l = 1.0 / std::sqrt(11.0);
  const double m = 3.0 / std::sqrt(11.0);
  add_orbit(r, Vec3(1, 0, 0), 4.0 / 315.0);
  add_orbit(r, Vec3(a, a, 0), 64.0 / 2835.0);
  add_orbit(r, Vec3(b, b, b), 27.0 / 1280.0);
  add_orbit(r, Vec3(l, l, m), 14641.0 / 725760.0);
  return r;
}

AngularRule product_rule(int nt, int np) {
  if (nt < 1 || np < 2 || np % 2 != 0) {
    throw DomainError("product angular rule needs NT >= 1 and even NP >= 2");
  }
  AngularRule r;
  r.name = "product:" + std::to_string(nt) + "x" + std::to_string(np);
  r.polar = nt;
  r.azimuth = np;
  const auto [ct, wt] = gauss_legendre(nt, -1.0, 1.0);
  for (int i = 0; i < nt; ++i) {
    const double st = std::sqrt(std::max(0.0, 1.0 - ct[i] * ct[i]));
    r.rings.push_back(ct[i]);
    for (int j = 0; j < np; ++j) {
      const double phi = 2.0 * M_PI * j / np;
      r.directions.emplace_back(st * std::cos(phi), st * std::sin(phi), ct[i]);
      r.weights.push_back(0.5 * wt[i] / np);
    }
  }
  return r;
}

// Basis x^a y^b z^c, c <= 1, a + b + c <= degree: spans polynomials on the sphere of that degree.
Eigen::VectorXd sphere_basis(const Vec3& n, int degree) {
  std::vector<double> out;
  for (int c = 0; c <= 1; ++c)
    for (int a = 0; a + c <= degree; ++a)
      for (int b = 0; a + b + c <= degree; ++b)
        out.push_back(std::pow(n[0], a) * std::pow(n[1], b) * std::pow(n[2], c));
  return Eigen::Map<Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(out.size()));
}

// 4-point Lagrange weights at t on x[i0..i0+3].
std::array<double, 4> lagrange4(const double* x, double t) {
  std::array<double, 4> w{};
  for (int i = 0; i < 4; ++i) {
    double c = 1.0;
    for (int j = 0; j < 4; ++j)
      if (j != i) c *= (t - x[j]) / (x[i] - x[j]);
    w[static_cast<std::size_t>(i)] = c;
  }
  return w;
}

// Window start for a 4-point stencil around t in sorted x (n >= 4).
std::size_t window4(const std::vector<double>& x, double t) {
  const auto up = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), t) - x.begin());
  const std::size_t lo = up == 0 ? 0 : up - 1;
  return std::min(lo == 0 ? 0 : lo - 1, x.size() - 4);
}

}  // namespace

AngularRule make_angular_rule(const std::string& spec) {
  if (spec == "lebedev26") return lebedev26();
  if (spec == "lebedev50") return lebedev50();
  static const std::regex product(R"(product:(\d+)x(\d+))");
  std::smatch m;
  if (std::regex_match(spec, m, product)) return product_rule(std::stoi(m[1]), std::stoi(m[2]));
  throw DomainError("unknown angular rule '" + spec + "'");
}

Vec3 spatial(const FourVector& p) { return {p[1], p[2], p[3]}; }

MomentumGrid::MomentumGrid(const GridSpec& spec) : spec_(spec), angular_(make_angular_rule(spec.angular)) {
  if (!(spec.mass >= 0.0)) throw DomainError("grid mass must be non-negative");
  if (!(spec.p_max > 0.0)) throw DomainError("grid p_max must be positive");
  if (spec.radial < 1) throw DomainError("grid needs at least one radial node");
  const auto [r, wr] = gauss_legendre(spec.radial, 0.0, spec.p_max);
  radii_ = r;
  rings_ = angular_.rings;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double p0 = std::sqrt(r[i] * r[i] + spec.mass * spec.mass);
    for (std::size_t j = 0; j < angular_.size(); ++j) {
      const Vec3 v = r[i] * angular_.directions[j];
      nodes_.emplace_back(p0, v[0], v[1], v[2]);
      weights_.push_back(wr[i] * r[i] * r[i] / (2.0 * p0) * 4.0 * M_PI * angular_.weights[j]);
    }
  }
  if (!angular_.product()) {
    fit_degree_ = angular_.size() >= 50 ? 5 : 3;
    const auto nd = static_cast<Eigen::Index>(angular_.size());
    const Eigen::Index nf = sphere_basis(Vec3(0, 0, 1), fit_degree_).size();
    Eigen::MatrixXd y(nd, nf);
    Eigen::VectorXd w(nd);
    for (Eigen::Index j = 0; j < nd; ++j) {
      y.row(j) = sphere_basis(angular_.directions[j], fit_degree_).transpose();
      w[j] = angular_.weights[j];
    }
    const Eigen::MatrixXd gram = y.transpose() * w.asDiagonal() * y;
    fit_ = gram.ldlt().solve(y.transpose() * w.asDiagonal());
  }
}

std::optional<std::size_t> MomentumGrid::find(const FourVector& p, double tolerance) const {
  const Vec3 v = spatial(p);
  const double r = v.norm();
  const double scale = std::max(1.0, r);
  auto it = std::lower_bound(radii_.begin(), radii_.end(), r - tolerance * scale);
  if (it == radii_.end() || std::abs(*it - r) > tolerance * scale) return std::nullopt;
  const auto shell = static_cast<std::size_t>(it - radii_.begin());
  const Vec3 n = v / r;
  for (std::size_t j = 0; j < angular_.size(); ++j) {
    if ((angular_.directions[j] - n).norm() <= tolerance) return shell * angular_.size() + j;
  }
  return std::nullopt;
}

std::optional<std::size_t> MomentumGrid::mirror(std::size_t k) const {
  const FourVector& p = nodes_[k];
  return find(FourVector(p[0], -p[1], -p[2], -p[3]));
}

std::vector<std::pair<std::size_t, double>> MomentumGrid::angular_stencil(const Vec3& n) const {
  std::vector<std::pair<std::size_t, double>> out;
  if (!angular_.product()) {
    const Eigen::VectorXd row = fit_.transpose() * sphere_basis(n, fit_degree_);
    for (Eigen::Index j = 0; j < row.size(); ++j) out.emplace_back(static_cast<std::size_t>(j), row[j]);
    return out;
  }
  const int nt = angular_.polar;
  const int np = angular_.azimuth;
  // cubic Lagrange in theta times periodic cubic Lagrange in phi. Near a pole the theta
  // window continues through it onto the rings on the far side (theta -> -theta, phi -> phi + pi),
  // where a smooth function on the sphere stays smooth in theta.
  struct Ring {
    double theta;
    int index;
    bool flipped;
  };
  std::vector<Ring> ext;
  for (int i = 0; i < std::min(nt, 2); ++i) ext.push_back({-std::acos(rings_[static_cast<std::size_t>(nt - 1 - i)]), nt - 1 - i, true});
  std::reverse(ext.begin(), ext.end());
  for (int i = nt - 1; i >= 0; --i) ext.push_back({std::acos(rings_[static_cast<std::size_t>(i)]), i, false});
  for (int i = 0; i < std::min(nt, 2); ++i) ext.push_back({2.0 * M_PI - std::acos(rings_[static_cast<std::size_t>(i)]), i, true});
  const double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
  std::vector<std::pair<const Ring*, double>> polar;
  if (ext.size() < 4) {
    const Ring* best = &ext.front();
    for (const Ring& r : ext)
      if (!r.flipped && std::abs(r.theta - theta) < std::abs(best->theta - theta)) best = &r;
    polar.emplace_back(best, 1.0);
  } else {
    std::vector<double> t;
    for (const Ring& r : ext) t.push_back(r.theta);
    const std::size_t i0 = window4(t, theta);
    const auto w = lagrange4(&t[i0], theta);
    for (std::size_t i = 0; i < 4; ++i) polar.emplace_back(&ext[i0 + i], w[i]);
  }
  double phi = std::atan2(n[1], n[0]);
  if (phi < 0.0) phi += 2.0 * M_PI;
  const double x = phi / (2.0 * M_PI / np);
  const int j0 = static_cast<int>(std::floor(x));
  const double offsets[4] = {-1.0, 0.0, 1.0, 2.0};
  const auto wp = lagrange4(offsets, x - j0);
  for (const auto& [ring, ci] : polar) {
    const int shift = ring->flipped ? np / 2 : 0;
    for (int d = 0; d < 4; ++d) {
      const int j = ((j0 - 1 + d + shift) % np + np) % np;
      const double c = ci * wp[static_cast<std::size_t>(d)];
      if (c != 0.0) out.emplace_back(static_cast<std::size_t>(ring->index * np + j), c);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, double>> MomentumGrid::stencil(const FourVector& p) const {
  if (auto k = find(p)) return {{*k, 1.0}};
  const Vec3 v = spatial(p);
  const double r = v.norm();
  std::vector<std::pair<std::size_t, double>> out;
  if (r > spec_.p_max) return out;
  const Vec3 n = r > 0.0 ? Vec3(v / r) : Vec3(0, 0, 1);
  const auto ang = angular_stencil(n);
  const std::size_t na = angular_.size();
  std::vector<std::pair<std::size_t, double>> radial;
  if (radii_.size() < 4) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < radii_.size(); ++i)
      if (std::abs(radii_[i] - r) < std::abs(radii_[best] - r)) best = i;
    radial.emplace_back(best, 1.0);
  } else {
    const std::size_t i0 = window4(radii_, r);
    const auto w = lagrange4(&radii_[i0], r);
    for (std::size_t i = 0; i < 4; ++i) radial.emplace_back(i0 + i, w[i]);
  }
  for (const auto& [i, ci] : radial)
    for (const auto& [j, cj] : ang) out.emplace_back(i * na + j, ci * cj);
  return out;
}

bool operator==(const MomentumGrid& a, const MomentumGrid& b) {
  return a.spec_.mass == b.spec_.mass && a.spec_.p_max == b.spec_.p_max && a.spec_.radial == b.spec_.radial &&
         a.angular_.name == b.angular_.name;
}

}  // namespace poincare
