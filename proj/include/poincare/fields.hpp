#ifndef POINCARE_FIELDS_HPP
#define POINCARE_FIELDS_HPP

#include <limits>
#include <string>
#include <vector>

#include "poincare/wigner_rep.hpp"

namespace poincare {

enum class FieldLayout { phi, chi, bispinor, bw, pf, rs };

std::string layout_name(FieldLayout layout);
FieldLayout parse_layout(const std::string& name);

/// Momentum-space field: one row per grid node, components per layout.
///   phi, chi   2s+1 spinor components (undotted / dotted)
///   bispinor   (phi, chi) stacked
///   bw         (C^4)^{(x)2s}, Dirac slot 0 most significant, Dirac index (alpha, alpha-dot)
///   pf         (C^2)^{(x)2s} with the `undotted` undotted slots first, then the dotted ones
///   rs         psi_mu for mu = 0..3 (lower index), each a Dirac spinor
struct Field {
  GridPtr grid;
  SpinLabel spin;
  FieldLayout layout = FieldLayout::phi;
  int undotted = 0;  // pf only
  BoostChoice section = BoostChoice::canonical;
  MatX values;

  double mass() const { return grid->mass(); }
  std::size_t size() const { return grid->size(); }
  int dotted() const { return spin.twice() - undotted; }
  VecX at(std::size_t k) const { return values.row(static_cast<Eigen::Index>(k)).transpose(); }
};

/// Number of components of a field with the given layout.
int component_count(FieldLayout layout, SpinLabel s);

/// phi(p) = D(L(p)) f(p) and chi(p) = hat D(L(p)) f(p).
Field phi_from_f(const WaveFunction& f, BoostChoice section = BoostChoice::canonical);
Field chi_from_f(const WaveFunction& f, BoostChoice section = BoostChoice::canonical);
Field bispinor_from_f(const WaveFunction& f, BoostChoice section = BoostChoice::canonical);
Field bispinor(const Field& phi, const Field& chi);

/// Invariant norm of the field:
///   phi   int phi^dagger D(hat p / m) phi
///   chi   int chi^dagger D(p / m) chi
///   bispinor  half the sum of the two
///   bw    2^{-2s} int psi^dagger (gamma^0 (x) ... (x) gamma^0) psi
///   pf, rs  through the inverse intertwiner
double field_norm(const Field& field);

struct DualityResidual {
  double chi_from_phi = 0.0;  // chi = D(hat p / m) phi
  double phi_from_chi = 0.0;  // phi = D(p / m) chi
};
DualityResidual duality_check(const Field& phi, const Field& chi);

/// Residuals below are per node, relative to |operator| |field(p)|, maximized over the grid.

/// Momentum-space generalized Dirac operator gamma^{mu_1...mu_2s} p_mu_1 ... p_mu_2s - m^{2s}.
double generalized_dirac_residual(const Field& psi);
/// The same with an explicit GammaSet (used by negative controls).
double generalized_dirac_residual(const Field& psi, const GammaSet& gamma);

/// B(p) = (L(p); hat L(p)), a 4x2 matrix.
MatX dirac_column(BoostChoice section, double mass, const FourVector& p);

Field bw_construct(const WaveFunction& f, BoostChoice section = BoostChoice::canonical);
/// Residuals of (gamma^mu_(j) p_mu - m) psi for j = 0..2s-1.
std::vector<double> bw_residual(const Field& psi);
/// max |psi - P psi| over transpositions P of two Dirac slots.
double bw_symmetry_defect(const Field& psi);

/// Pauli-Fierz field with `dotted` dotted and 2s - dotted undotted indices.
Field pf_construct(const WaveFunction& f, int dotted, BoostChoice section = BoostChoice::canonical);

// NaN when the split has no index of that kind.
struct PFResidual {
  double undotted_to_dotted = std::numeric_limits<double>::quiet_NaN();  // hat(p) on an undotted slot
  double dotted_to_undotted = std::numeric_limits<double>::quiet_NaN();  // p on a dotted slot
};
/// Both relations against the neighbouring splits built from the same amplitude.
PFResidual pf_residual(const Field& phi, const WaveFunction& f);

/// Spin-3/2 vector-spinor built from the (1,2) and (2,1) Pauli-Fierz fields by turning one
/// undotted-dotted index pair into a vector index.
Field rarita_schwinger(const WaveFunction& f, BoostChoice section = BoostChoice::canonical);

struct RSResidual {
  double dirac = 0.0;       // (gamma.p - m) psi_mu, worst mu
  double subsidiary = 0.0;  // gamma^mu psi_mu
};
RSResidual rs_residual(const Field& psi);

/// The 16x4 map f(pi) -> psi_mu(pi) at the standard momentum.
MatX rs_rest_map();

/// gamma^mu for s = 1/2 in the chiral layout (phi, chi).
const std::array<MatX, 4>& dirac_gammas();

/// Inverse intertwiner: recovers the Wigner amplitude from any field layout.
WaveFunction to_wigner(const Field& field);

/// (U(a,A) field)(p) = e^{i p.a} S(A) field(Lambda_A^{-1} p) with the layout's S(A).
/// Pulled-back momenta are interpolated on the grid.
Field field_apply(const PoincareElement& g, const Field& field);

/// Field at spacetime points: (2 pi)^{-3/2} sum_k w_k field(p_k) e^{-i p_k.x}.
MatX x_space_transform(const Field& field, const std::vector<FourVector>& points);

/// |(box + m^2) field(x)| by 5-point second differences with step h, relative to m^2 max|field(x)|.
double klein_gordon_residual(const Field& field, const FourVector& x, double h);

}  // namespace poincare

#endif  // POINCARE_FIELDS_HPP
