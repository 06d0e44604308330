#ifndef POINCARE_SPINSTAT_HPP
#define POINCARE_SPINSTAT_HPP

#include <functional>
#include <string>
#include <vector>

#include "poincare/fock.hpp"

namespace poincare {

/// Bracket kernels
///   K_pm(xi) = (2 pi)^{-3} int dOmega_m(p) P(p) [e^{-i p.xi} pm e^{+i p.xi}]
/// with P(p) = D(p/m) for the 2s+1 component field. Pulling P out as P(i d) turns the bracket into
/// e^{-ip.xi} pm (-1)^{2s} e^{ip.xi}, so the kernel is local iff pm (-1)^{2s} = -1.

enum class Damping { energy, gaussian };  // e^{-eps p^0} or e^{-eps |p|^2}

struct KernelConfig {
  std::vector<double> eps{0.2, 0.1, 0.05, 0.025};  // units 1/m (energy) or 1/m^2 (gaussian)
  Damping damping = Damping::energy;
  double tail = 40.0;         // radial cutoff where the damping factor is ~ e^{-tail}
  double panel_phase = 8.0;   // max phase advance across one 16-point radial panel
};

Damping parse_damping(const std::string& name);

struct KernelSequence {
  std::vector<double> eps;
  std::vector<MatX> values;  // damped kernel per eps
  MatX extrapolated;         // polynomial extrapolation to eps = 0
  double extrapolation_error = 0.0;  // max entry of |full order - one order lower|

  double magnitude() const { return extrapolated.norm(); }
  std::vector<double> magnitudes() const;
};

/// A matrix-valued polynomial in the contravariant momentum components.
using MatrixPolynomial = std::function<MatX(const FourVector&)>;

/// (2 pi)^{-3} int dOmega [P_minus(p) e^{-ip.xi} + sign P_plus(p) e^{ip.xi}] damped, per eps,
/// for polynomials of total degree <= degree. The spatial part of xi defines the polar axis;
/// phi is integrated exactly and theta by Gauss-Legendre scaled to |p||xi|.
KernelSequence damped_kernel(const MatrixPolynomial& p_minus, const MatrixPolynomial& p_plus, int degree,
                             int sign, double mass, const FourVector& xi, const KernelConfig& config = {});

KernelSequence bracket_kernel(SpinLabel s, double mass, const FourVector& xi, Bracket bracket,
                              const KernelConfig& config = {});

/// Undamped sum over the nodes of a momentum grid (all nodes, or the listed ones).
/// Mirror pairs are summed first so that p -> -p cancellations are exact.
MatX bracket_kernel_grid(SpinLabel s, const MomentumGrid& grid, const FourVector& xi, Bracket bracket,
                         const std::vector<std::size_t>& nodes = {});

/// Multispinor kernel (2 pi)^{-3} int dOmega [(x)_j (gamma.p + m) e^{-ip.xi} pm (x)_j (gamma.p - m) e^{ip.xi}],
/// i.e. (x)_j [i gamma_(j).d + m] applied to the scalar kernel of matching locality.
KernelSequence bw_bracket(SpinLabel s, double mass, const FourVector& xi, Bracket bracket,
                          const KernelConfig& config = {});
MatX bw_bracket_grid(SpinLabel s, const MomentumGrid& grid, const FourVector& xi, Bracket bracket);

/// (x)_j (gamma.p + sign m), 4^{2s} square.
MatX bw_polynomial(SpinLabel s, double mass, const FourVector& p, int sign);

struct JordanPauli {
  double value = 0.0;         // Delta(xi), from i Delta = K_commutator(s = 0)
  double imaginary = 0.0;     // leftover imaginary part of Delta (should vanish)
  double extrapolation_error = 0.0;
  bool near_light_cone = false;
  std::vector<double> sequence;
};

inline constexpr double kLightConeFloor = 1e-2;

JordanPauli jordan_pauli_delta(double mass, const FourVector& xi, const KernelConfig& config = {},
                               double light_cone_floor = kLightConeFloor);

enum class Verdict { pass, fail, inconclusive };
std::string verdict_name(Verdict v);

struct VerdictConfig {
  double mass = 1.0;
  std::vector<int> twice_spins{0, 1, 2};
  std::vector<FourVector> points;  // empty: default_test_points(mass)
  double ratio = 1e3;
  double light_cone_floor = kLightConeFloor;
  KernelConfig kernel;
};

/// xi = d (sinh 0.3, cosh 0.3 n) with n = (1, 2, 2)/3 and m d in {1, 2, 4}.
std::vector<FourVector> default_test_points(double mass);

struct PointReport {
  int twice_s = 0;
  FourVector xi;
  Bracket local = Bracket::commutator;  // the bracket compatible with locality for this spin
  KernelSequence local_kernel;
  KernelSequence nonlocal_kernel;
  double ratio = 0.0;       // |nonlocal| / |local| after extrapolation
  bool monotone = false;    // |local(eps)| decreasing along the eps sequence
  bool skipped = false;     // light-cone point: no kernel evaluated
};

struct StatisticsReport {
  std::vector<PointReport> points;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> warnings;
};

/// PASS iff at every evaluated point the locality-compatible bracket is smaller than the other one
/// by the configured ratio; FAIL iff somewhere the other bracket is smaller by that ratio;
/// otherwise (or with no evaluable point) INCONCLUSIVE.
StatisticsReport spin_statistics_verdict(const VerdictConfig& config);

}  // namespace poincare

#endif  // POINCARE_SPINSTAT_HPP
