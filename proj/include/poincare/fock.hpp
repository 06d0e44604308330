#ifndef POINCARE_FOCK_HPP
#define POINCARE_FOCK_HPP

#include <vector>

#include <Eigen/Sparse>

#include "poincare/wigner_rep.hpp"

namespace poincare {

using SparseMat = Eigen::SparseMatrix<Complex>;

enum class Statistics { bose, fermi };

/// One-particle basis function f(p, lambda) = delta_{p, node} delta_{lambda, lambda_k} / sqrt(w_node),
/// unit-normalized in the quadrature inner product.
struct Mode {
  std::size_t node = 0;
  int lambda = 0;  // column index: lambda = s - index
  friend bool operator==(const Mode&, const Mode&) = default;
};

struct ModeSet {
  GridPtr grid;
  SpinLabel spin;
  Statistics statistics = Statistics::fermi;
  int cutoff = 3;  // bosons: occupations 0..cutoff
  std::vector<Mode> modes;

  std::size_t size() const { return modes.size(); }
  /// Every (node, lambda) for the listed nodes.
  static ModeSet multiplets(GridPtr grid, SpinLabel s, Statistics stat, const std::vector<std::size_t>& nodes,
                            int cutoff = 3);
};

/// Occupation basis, mode 0 most significant. Fermi operators carry Jordan-Wigner strings
/// over the preceding modes, so |n> = (a_0^dag)^{n_0} ... (a_{M-1}^dag)^{n_{M-1}} Omega (Bose: / sqrt(prod n_k!)).
struct FockSpace {
  ModeSet modes;
  std::size_t dimension = 0;
  std::vector<SparseMat> a;
  std::vector<SparseMat> adag;

  int levels() const { return modes.statistics == Statistics::fermi ? 2 : modes.cutoff + 1; }
  std::vector<int> occupation(std::size_t state) const;
  int total(std::size_t state) const;
  VecX vacuum() const;
  SparseMat identity() const;
};

inline constexpr std::size_t kDefaultFockBound = 4096;

FockSpace fock_build(const ModeSet& modes, std::size_t max_dimension = kDefaultFockBound);

/// Deviations from the canonical relations.
///   mixed: all pairs k != l and [a_k, a_l]_pm, on the whole space
///   diagonal: [a_k, a_k^dag]_pm - 1 on states below the cutoff of mode k (all states for fermions)
///   top: the same on states at the cutoff (bosons only; 0 for fermions)
struct AlgebraDefect {
  double mixed = 0.0;
  double diagonal = 0.0;
  double top = 0.0;
};
AlgebraDefect algebra_check(const FockSpace& fock);

/// Projector onto states whose total particle number is at most n.
SparseMat number_projector(const FockSpace& fock, int n);

/// phi_alpha(x) = sum_k [a_k u_alpha^k(x) + a_k^dag v_alpha^k(x)] with
///   u^k(x) = (2 pi)^{-3/2} sqrt(w) D(L(p)) e_lambda e^{-i p.x},
///   v^k(x) = (2 pi)^{-3/2} sqrt(w) D(L(p) eps) e_lambda e^{+i p.x}.
std::vector<SparseMat> field_operator(const FockSpace& fock, const FourVector& x,
                                      BoostChoice section = BoostChoice::canonical);

/// The coefficient vectors u^k(x) and v^k(x), one column per mode.
struct ModeFunctions {
  MatX u;
  MatX v;
};
ModeFunctions mode_functions(const ModeSet& modes, const FourVector& x, BoostChoice section = BoostChoice::canonical);

/// Matrix of the one-particle operator U_1(g) on the span of the modes, from rep_apply.
/// Throws DomainError if the span is not invariant.
MatX one_particle_matrix(const ModeSet& modes, const PoincareElement& g,
                         BoostChoice section = BoostChoice::canonical);

/// Second quantization: U a_k^dag U^{-1} = sum_i u_{ik} a_i^dag and U Omega = Omega.
/// For bosons only states with total occupation <= cutoff are mapped (others give zero columns).
SparseMat second_quantize(const FockSpace& fock, const MatX& u1);

/// max_{alpha, x} |U phi_alpha(x) U^{-1} - sum_beta D_{alpha beta}(A^{-1}) phi_beta(Lambda_A x + a)|,
/// relative to max |phi(x)|. Bosons: compared on states with total occupation < cutoff.
double covariance_check(const FockSpace& fock, const PoincareElement& g, const std::vector<FourVector>& points,
                        BoostChoice section = BoostChoice::canonical);

enum class Bracket { commutator, anticommutator };

inline int bracket_sign(Bracket b) { return b == Bracket::commutator ? -1 : 1; }
/// Commutator for integer spin, anticommutator for half-integer spin.
inline Bracket local_bracket(SpinLabel s) { return s.twice() % 2 == 0 ? Bracket::commutator : Bracket::anticommutator; }
inline Bracket statistics_bracket(Statistics stat) {
  return stat == Statistics::bose ? Bracket::commutator : Bracket::anticommutator;
}

/// Point smearing: phi(f) = sum_j sum_alpha coeff(j, alpha) phi_alpha(x_j).
struct Smearing {
  std::vector<FourVector> points;
  MatX coeff;
};

SparseMat smeared_field(const FockSpace& fock, const Smearing& f, BoostChoice section = BoostChoice::canonical);

/// [phi(f), phi(g)^dag]_pm with the bracket of the Fock statistics, written as c 1 + R.
/// Bosons: restricted to states where every mode is below the cutoff.
struct SmearedBracket {
  Complex scalar;
  double defect = 0.0;  // max |R|
};
SmearedBracket smeared_bracket(const FockSpace& fock, const Smearing& f, const Smearing& g,
                               BoostChoice section = BoostChoice::canonical);

}  // namespace poincare

#endif  // POINCARE_FOCK_HPP
