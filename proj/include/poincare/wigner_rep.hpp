#ifndef POINCARE_WIGNER_REP_HPP
#define POINCARE_WIGNER_REP_HPP

#include <functional>
#include <memory>
#include <vector>

#include "poincare/grid.hpp"
#include "poincare/irreps.hpp"
#include "poincare/orbits.hpp"

namespace poincare {

using GridPtr = std::shared_ptr<const MomentumGrid>;

inline GridPtr make_grid(const GridSpec& spec) { return std::make_shared<const MomentumGrid>(spec); }

/// Amplitudes f_lambda(p): one row per grid node, one column per lambda = s, ..., -s.
struct WaveFunction {
  GridPtr grid;
  SpinLabel spin;
  MatX amp;

  WaveFunction() = default;
  WaveFunction(GridPtr g, SpinLabel s);
  WaveFunction(GridPtr g, SpinLabel s, MatX amplitudes);

  double mass() const { return grid->mass(); }
  std::size_t size() const { return grid->size(); }
  VecX at(std::size_t k) const { return amp.row(static_cast<Eigen::Index>(k)).transpose(); }
  /// Amplitude at an arbitrary momentum via the grid's interpolation stencil.
  VecX interpolate(const FourVector& p) const;
};

/// sum_lambda int dOmega conj(f_lambda) g_lambda, by quadrature.
Complex inner_product(const WaveFunction& f, const WaveFunction& g);

/// A smooth test amplitude p -> f(p) in C^{2s+1}.
using Amplitude = std::function<VecX(const FourVector&)>;

WaveFunction sample(GridPtr grid, SpinLabel s, const Amplitude& f);

/// (a, A) with (a1, A1)(a2, A2) = (a1 + Lambda_{A1} a2, A1 A2).
struct PoincareElement {
  FourVector a;
  SL2C A;

  friend PoincareElement operator*(const PoincareElement& x, const PoincareElement& y) {
    return {x.a + act(x.A, y.a), x.A * y.A};
  }
  PoincareElement inverse() const;
};

/// (U(a,A) f)(p) = e^{i p.a} D(R(p,A)) f(Lambda_A^{-1} p), R(p,A) = L(p)^{-1} A L(Lambda_A^{-1} p).
/// Pulled-back momenta that are not grid nodes are interpolated.
WaveFunction rep_apply(const PoincareElement& g, const WaveFunction& f, BoostChoice choice = BoostChoice::canonical);

/// Same, but f is evaluated exactly at the pulled-back momenta.
WaveFunction rep_apply(const PoincareElement& g, GridPtr grid, SpinLabel s, const Amplitude& f,
                       BoostChoice choice = BoostChoice::canonical);

/// psi(p) = D(L(p)) f(p), and back.
WaveFunction covariant_form(const WaveFunction& f, BoostChoice choice = BoostChoice::canonical);
WaveFunction from_covariant_form(const WaveFunction& psi, BoostChoice choice = BoostChoice::canonical);

/// <psi1(p), psi2(p)>_p = psi1^dagger D(hat(p)/m) psi2, the p-dependent product of the covariant form.
Complex covariant_pointwise_product(SpinLabel s, double mass, const FourVector& p, const VecX& psi1,
                                    const VecX& psi2);

/// (U(a,A) psi)(p) = e^{i p.a} D(A) psi(Lambda_A^{-1} p) on the covariant form.
WaveFunction covariant_apply(const PoincareElement& g, const WaveFunction& psi);

/// Multiplication operator D(L_can(p)^{-1} L_hel(p)), which intertwines the helicity-section
/// representation with the canonical one.
WaveFunction section_intertwiner(const WaveFunction& f_helicity);

/// Massless helicity representation on a scalar amplitude over a light-cone grid:
/// (U f)(p) = e^{i p.a} e^{i lambda phi} f(Lambda_A^{-1} p), phi read from the stabilizer element.
WaveFunction massless_rep_apply(int twice_helicity, const PoincareElement& g, const WaveFunction& f);

/// The binary octahedral group: 48 elements of SU(2) covering the rotations of the cube.
const std::vector<SL2C>& binary_octahedral();

}  // namespace poincare

#endif  // POINCARE_WIGNER_REP_HPP
