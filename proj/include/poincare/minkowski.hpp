#ifndef POINCARE_MINKOWSKI_HPP
#define POINCARE_MINKOWSKI_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace poincare {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4d;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;
using Rng = std::mt19937_64;

/// Raised when an input lies outside the domain of an operation
/// (off-shell momentum, non-hermitian matrix, bad spin label, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

namespace tol {
inline constexpr double algebraic = 1e-12;  // identities on unit-scale inputs
inline constexpr double inverted = 1e-10;   // after one matrix inversion
inline constexpr double on_shell_rel = 1e-9;
}  // namespace tol

/// Contravariant components (x^0, x^1, x^2, x^3), metric diag(1,-1,-1,-1), hbar = c = 1.
struct FourVector {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  constexpr FourVector() = default;
  constexpr FourVector(double t, double x, double y, double z) : c{t, x, y, z} {}

  constexpr double& operator[](int mu) { return c[static_cast<std::size_t>(mu)]; }
  constexpr double operator[](int mu) const { return c[static_cast<std::size_t>(mu)]; }

  double spatial_norm() const;
  /// Covariant components x_mu = eta_{mu nu} x^nu.
  FourVector lowered() const { return {c[0], -c[1], -c[2], -c[3]}; }

  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
  }
  friend FourVector operator-(const FourVector& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
  friend FourVector operator*(double s, const FourVector& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
  }
  friend bool operator==(const FourVector&, const FourVector&) = default;
};

double minkowski_dot(const FourVector& x, const FourVector& y);

/// The hermitian matrix x^mu sigma_mu with sigma_mu = (1, sigma_k).
Mat2 to_hermitian(const FourVector& x);

/// Inverse of to_hermitian; rejects matrices that are not hermitian within `tolerance`.
FourVector from_hermitian(const Mat2& x, double tolerance = tol::inverted);

/// Pauli matrices with sigma(0) the identity.
const Mat2& sigma(int mu);

/// The standard symplectic matrix [[0, 1], [-1, 0]].
const Mat2& epsilon();

/// A 2x2 complex matrix of unit determinant.
class SL2C {
 public:
  SL2C() : m_(Mat2::Identity()) {}

  /// Throws DomainError unless |det - 1| <= tolerance.
  static SL2C from(const Mat2& m, double tolerance = tol::inverted);
  /// Rescales a non-singular matrix by a square root of its determinant.
  static SL2C normalized(const Mat2& m);

  const Mat2& matrix() const { return m_; }
  operator const Mat2&() const { return m_; }  // NOLINT: SL2C is a Mat2 with an invariant
  Complex operator()(int i, int j) const { return m_(i, j); }

  SL2C inverse() const;
  SL2C adjoint() const;
  friend SL2C operator*(const SL2C& a, const SL2C& b) { return SL2C(a.m_ * b.m_, 0); }
  friend SL2C operator-(const SL2C& a) { return SL2C(-a.m_, 0); }

 private:
  SL2C(const Mat2& m, int /*unchecked*/) : m_(m) {}
  Mat2 m_;
};

/// A restricted Lorentz transformation Lambda (Lambda^mu_nu, row mu, column nu).
struct LorentzMatrix {
  Mat4 m = Mat4::Identity();

  FourVector apply(const FourVector& x) const;
  LorentzMatrix inverse() const;
  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    return {a.m * b.m};
  }
  /// max |(Lambda^T eta Lambda - eta)_{ij}|
  double metric_defect() const;
};

/// The two-fold covering homomorphism lambda: SL(2,C) -> L+^, defined by
/// to_hermitian(lambda(A) x) = A to_hermitian(x) A^dagger.
LorentzMatrix covering_map(const Mat2& a);

/// Lambda_A p and Lambda_A^{-1} p, computed through the covering relation without forming the 4x4 matrix.
FourVector act(const Mat2& a, const FourVector& p);
FourVector act_inverse(const Mat2& a, const FourVector& p);

/// hat(A) = eps conj(A) eps^{-1}; equals (A^dagger)^{-1} on SL(2,C).
Mat2 hat(const Mat2& a);
/// hat with an explicit symplectic matrix; used by negative controls.
Mat2 hat_with(const Mat2& eps, const Mat2& a);

/// exp(X) for traceless X, in closed form (det = 1 exactly up to rounding).
SL2C exp_traceless(const Mat2& x);

/// exp of a random traceless matrix with real and imaginary parts of the
/// entries uniform in [-1, 1].
SL2C random_sl2c(Rng& rng);
/// exp(-i theta.sigma/2) with theta uniform in the ball of radius pi.
SL2C random_su2(Rng& rng);
FourVector random_four_vector(Rng& rng, double scale = 1.0);
/// Random point on the mass shell with spatial components uniform in [-scale, scale].
FourVector random_on_shell(Rng& rng, double mass, double scale = 3.0);
/// Spatial vector (x, y, z) put on the shell p^0 = sqrt(p^2 + m^2).
FourVector on_shell(double mass, double px, double py, double pz);

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

}  // namespace poincare

#endif  // POINCARE_MINKOWSKI_HPP
