#ifndef POINCARE_IRREPS_HPP
#define POINCARE_IRREPS_HPP

#include <array>
#include <span>
#include <vector>

#include "poincare/minkowski.hpp"

namespace poincare {

/// Spin s stored as the integer 2s, so half-integers are exact.
class SpinLabel {
 public:
  constexpr SpinLabel() = default;
  explicit SpinLabel(int twice_s);

  constexpr int twice() const { return twice_; }
  constexpr int dim() const { return twice_ + 1; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool half_integer() const { return (twice_ % 2) != 0; }
  /// 2 lambda for the basis index `index` (lambda = s, s-1, ..., -s).
  constexpr int twice_lambda(int index) const { return twice_ - 2 * index; }

  friend constexpr bool operator==(SpinLabel, SpinLabel) = default;

 private:
  int twice_ = 0;
};

/// D^(s,0)(A) on the orthonormal monomials u^{s+l} v^{s-l} / sqrt((s+l)!(s-l)!),
/// rows and columns ordered l = s, s-1, ..., -s. Defined for any 2x2 matrix
/// (it is a homogeneous polynomial of degree 2s in the entries); s = 1/2 gives A.
MatX spin_rep(SpinLabel s, const Mat2& a);

/// D^(0,s)(A) = D^(s,0)(hat A).
MatX hat_rep(SpinLabel s, const Mat2& a);

/// Derivative of spin_rep at the identity along X (the Lie algebra representation).
MatX spin_generator(SpinLabel s, const Mat2& x);

/// Angular momentum matrices J_k = dD(sigma_k / 2), k = 1, 2, 3.
std::array<MatX, 3> angular_momentum(SpinLabel s);

/// Isometry from C^{2s+1} onto the totally symmetric subspace of (C^2)^{(x)2s}.
/// Tensor slot 0 is the most significant binary digit; spinor index 0 is "u".
MatX symmetric_embedding(SpinLabel s);

/// Multi-index counts (n_0, n_1, n_2, n_3) with n_0 + ... + n_3 = 2s, in lexicographic order.
std::vector<std::array<int, 4>> symmetric_multi_indices(int degree);

/// Number of index tuples sharing the counts `alpha` (a multinomial coefficient).
double multinomial(const std::array<int, 4>& alpha);

/// Generalized sigma matrices: totally symmetric tensors with
///   D(to_hermitian(p))     = sigma^{mu_1...mu_2s}     p_{mu_1} ... p_{mu_2s}
///   D(hat to_hermitian(p)) = sigma_hat^{mu_1...mu_2s} p_{mu_1} ... p_{mu_2s}.
/// Only one representative per symmetric index class is stored.
struct GeneralizedSigma {
  SpinLabel spin;
  std::vector<std::array<int, 4>> classes;
  std::vector<MatX> sigma;
  std::vector<MatX> sigma_hat;

  std::size_t size() const { return classes.size(); }
  std::size_t class_of(std::span<const int> mu) const;
  const MatX& component(std::span<const int> mu) const { return sigma[class_of(mu)]; }
  const MatX& hat_component(std::span<const int> mu) const { return sigma_hat[class_of(mu)]; }

  /// Contraction with p_{mu}; `p` holds contravariant components and is lowered here.
  MatX contract(const FourVector& p) const;
  MatX contract_hat(const FourVector& p) const;
};

/// Extracts the sigma tensors by polarization on the integer points {alpha : |alpha| = 2s}.
/// Throws DomainError if the polarization system is numerically singular.
GeneralizedSigma extract_sigma(SpinLabel s);

/// gamma^{mu_1...mu_2s} = [[0, sigma], [sigma_hat, 0]] per symmetric index class.
struct GammaSet {
  SpinLabel spin;
  std::vector<std::array<int, 4>> classes;
  std::vector<MatX> gamma;

  std::size_t size() const { return classes.size(); }
  MatX contract(const FourVector& p) const;
};

GammaSet gamma_matrices(SpinLabel s);
GammaSet gamma_matrices(const GeneralizedSigma& sigma);

}  // namespace poincare

#endif  // POINCARE_IRREPS_HPP
