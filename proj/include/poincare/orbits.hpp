#ifndef POINCARE_ORBITS_HPP
#define POINCARE_ORBITS_HPP

#include "poincare/minkowski.hpp"

namespace poincare {

enum class BoostChoice { canonical, helicity };

struct MassShell {
  double mass = 1.0;  // 0 selects the forward light cone

  bool massless() const { return mass == 0.0; }
  /// (m,0,0,0), or (1/2,0,0,1/2) on the cone.
  FourVector standard_momentum() const;
  /// Throws DomainError unless p lies on this orbit (relative tolerance tol::on_shell_rel).
  void require_on_shell(const FourVector& p) const;
};

/// (m + p)/sqrt(2m(m + p^0)): the positive hermitian L with L L^dagger = p/m.
SL2C canonical_boost(double mass, const FourVector& p);

struct HelicityBoost {
  SL2C rotation;  // exp(-i phi sigma3/2) exp(-i theta sigma2/2)
  Mat2 dilation;  // diag(sqrt((p0+|p|)/m), sqrt((p0-|p|)/m))
  double theta = 0.0;
  double phi = 0.0;

  SL2C boost() const { return SL2C::normalized(rotation.matrix() * dilation); }
};

/// Polar decomposition R H; at |p| = 0 the rotation is the identity.
HelicityBoost helicity_boost(double mass, const FourVector& p);

/// Boost section selected by `choice`; also used for the massless cone when mass == 0.
SL2C boost(BoostChoice choice, double mass, const FourVector& p);

/// Wigner rotation W(p, A) = L(Lambda_A p)^{-1} A L(p).
SL2C wigner_rotation(BoostChoice choice, double mass, const FourVector& p, const SL2C& a);

/// R(p, A) = L(p)^{-1} A L(Lambda_A^{-1} p): the little-group factor in the active form of the rep.
SL2C wigner_rotation_inverse_form(BoostChoice choice, double mass, const FourVector& p, const SL2C& a);

inline constexpr double kMasslessEnergyFloor = 1e-8;

/// Rotation taking the z axis to the direction of p, followed by diag(sqrt(2 p0), 1/sqrt(2 p0)).
SL2C massless_boost(const FourVector& p, double energy_floor = kMasslessEnergyFloor);

/// Element of the pi-stabilizer [[e^{i phi/2}, a e^{-i phi/2}], [0, e^{-i phi/2}]], phi mod 4 pi.
struct MasslessLittle {
  Complex a{0.0, 0.0};
  double phi = 0.0;

  Mat2 matrix() const;
  /// Euclidean-motion image (translation a, rotation angle phi mod 2 pi) composes as
  /// (a1, phi1)(a2, phi2) = (a1 + e^{i phi1} a2, phi1 + phi2).
  friend MasslessLittle operator*(const MasslessLittle& x, const MasslessLittle& y);
};

/// Reads (a, phi) off a stabilizer element; rejects A with A pi A^dagger != pi beyond `tolerance`.
MasslessLittle massless_little_group_decompose(const Mat2& a, double tolerance = tol::inverted);

/// Wraps an angle into [0, period).
double wrap_angle(double x, double period);

}  // namespace poincare

#endif  // POINCARE_ORBITS_HPP
