#include "poincare/orbits.hpp"

#include <algorithm>
#include <cmath>

namespace poincare {

namespace {

constexpr Complex kI{0.0, 1.0};

Mat2 rotation_to(double theta, double phi) {
  // exp(-i phi sigma3/2) exp(-i theta sigma2/2)
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex em = std::exp(-0.5 * kI * phi);
  const Complex ep = std::exp(0.5 * kI * phi);
  Mat2 r;
  r << em * c, -em * s, ep * s, ep * c;
  return r;
}

void polar_angles(const FourVector& p, double& theta, double& phi) {
  const double r = p.spatial_norm();
  if (r == 0.0) {
    theta = 0.0;
    phi = 0.0;
    return;
  }
  // rounding noise off the z axis would otherwise pick an arbitrary azimuth
  if (std::hypot(p[1], p[2]) <= 1e-13 * r) {
    theta = p[3] > 0.0 ? 0.0 : M_PI;
    phi = 0.0;
    return;
  }
  theta = std::acos(std::clamp(p[3] / r, -1.0, 1.0));
  phi = wrap_angle(std::atan2(p[2], p[1]), 2.0 * M_PI);
}

}  // namespace

double wrap_angle(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

FourVector MassShell::standard_momentum() const {
  return massless() ? FourVector(0.5, 0.0, 0.0, 0.5) : FourVector(mass, 0.0, 0.0, 0.0);
}

void MassShell::require_on_shell(const FourVector& p) const {
  if (!(p[0] > 0.0)) throw DomainError("momentum has non-positive energy");
  const double p2 = minkowski_dot(p, p);
  // relative to p0^2, which bounds the rounding in p.p
  if (std::abs(p2 - mass * mass) > tol::on_shell_rel * p[0] * p[0]) {
    throw DomainError("momentum is off shell: p.p = " + std::to_string(p2) + ", m^2 = " +
                      std::to_string(mass * mass));
  }
}

SL2C canonical_boost(double mass, const FourVector& p) {
  if (!(mass > 0.0)) throw DomainError("canonical_boost: mass must be positive");
  MassShell{mass}.require_on_shell(p);
  const Mat2 num = mass * Mat2::Identity() + to_hermitian(p);
  return SL2C::normalized(num / std::sqrt(2.0 * mass * (mass + p[0])));
}

HelicityBoost helicity_boost(double mass, const FourVector& p) {
  if (!(mass > 0.0)) throw DomainError("helicity_boost: mass must be positive");
  MassShell{mass}.require_on_shell(p);
  HelicityBoost h;
  polar_angles(p, h.theta, h.phi);
  h.rotation = SL2C::normalized(rotation_to(h.theta, h.phi));
  const double r = p.spatial_norm();
  // p0 - |p| = m^2/(p0 + |p|) avoids cancellation.
  const double plus = (p[0] + r) / mass;
  const double minus = mass / (p[0] + r);
  h.dilation = Mat2::Zero();
  h.dilation(0, 0) = std::sqrt(plus);
  h.dilation(1, 1) = std::sqrt(minus);
  return h;
}

SL2C boost(BoostChoice choice, double mass, const FourVector& p) {
  if (mass == 0.0) return massless_boost(p);
  return choice == BoostChoice::canonical ? canonical_boost(mass, p) : helicity_boost(mass, p).boost();
}

SL2C wigner_rotation(BoostChoice choice, double mass, const FourVector& p, const SL2C& a) {
  const FourVector q = act(a, p);
  return boost(choice, mass, q).inverse() * a * boost(choice, mass, p);
}

SL2C wigner_rotation_inverse_form(BoostChoice choice, double mass, const FourVector& p, const SL2C& a) {
  const FourVector q = act_inverse(a, p);
  return boost(choice, mass, p).inverse() * a * boost(choice, mass, q);
}

SL2C massless_boost(const FourVector& p, double energy_floor) {
  if (!(p[0] > energy_floor)) throw DomainError("massless_boost: p^0 below the energy floor");
  MassShell{0.0}.require_on_shell(p);
  double theta = 0.0;
  double phi = 0.0;
  polar_angles(p, theta, phi);
  Mat2 d = Mat2::Zero();
  d(0, 0) = std::sqrt(2.0 * p[0]);
  d(1, 1) = 1.0 / std::sqrt(2.0 * p[0]);
  return SL2C::normalized(rotation_to(theta, phi) * d);
}

Mat2 MasslessLittle::matrix() const {
  const Complex e = std::exp(0.5 * kI * phi);
  Mat2 m;
  m << e, a / e, 0.0, 1.0 / e;
  return m;
}

MasslessLittle operator*(const MasslessLittle& x, const MasslessLittle& y) {
  return {x.a + std::exp(kI * x.phi) * y.a, wrap_angle(x.phi + y.phi, 4.0 * M_PI)};
}

MasslessLittle massless_little_group_decompose(const Mat2& a, double tolerance) {
  Mat2 pi = Mat2::Zero();
  pi(0, 0) = 1.0;
  const double defect = max_abs(Mat2(a * pi * a.adjoint() - pi));
  if (defect > tolerance || std::abs(a(1, 0)) > tolerance) {
    throw DomainError("massless_little_group_decompose: element does not stabilize pi (defect " +
                      std::to_string(defect) + ")");
  }
  return {a(0, 1) / a(1, 1), wrap_angle(2.0 * std::arg(a(0, 0)), 4.0 * M_PI)};
}

}  // namespace poincare
