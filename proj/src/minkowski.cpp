#include "poincare/minkowski.hpp"

#include <cmath>

namespace poincare {

namespace {

constexpr Complex kI{0.0, 1.0};

// from_hermitian without the hermiticity check, for matrices hermitian by construction.
FourVector read_hermitian(const Mat2& x) {
  return {0.5 * (x(0, 0).real() + x(1, 1).real()),
          0.5 * (x(1, 0).real() + x(0, 1).real()),
          0.5 * (x(1, 0).imag() - x(0, 1).imag()),
          0.5 * (x(0, 0).real() - x(1, 1).real())};
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

double FourVector::spatial_norm() const {
  return std::sqrt(c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
}

double minkowski_dot(const FourVector& x, const FourVector& y) {
  return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

Mat2 to_hermitian(const FourVector& x) {
  Mat2 m;
  m << Complex(x[0] + x[3], 0.0), Complex(x[1], -x[2]),
       Complex(x[1], x[2]), Complex(x[0] - x[3], 0.0);
  return m;
}

FourVector from_hermitian(const Mat2& x, double tolerance) {
  const double defect = max_abs(Mat2(x - x.adjoint()));
  if (defect > tolerance) {
    throw DomainError("from_hermitian: matrix is not hermitian (defect " +
                      std::to_string(defect) + ")");
  }
  return read_hermitian(x);
}

const Mat2& sigma(int mu) {
  static const std::array<Mat2, 4> table = [] {
    std::array<Mat2, 4> s;
    s[0] << 1.0, 0.0, 0.0, 1.0;
    s[1] << 0.0, 1.0, 1.0, 0.0;
    s[2] << 0.0, -kI, kI, 0.0;
    s[3] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return table.at(static_cast<std::size_t>(mu));
}

const Mat2& epsilon() {
  static const Mat2 eps = [] {
    Mat2 e;
    e << 0.0, 1.0, -1.0, 0.0;
    return e;
  }();
  return eps;
}

SL2C SL2C::from(const Mat2& m, double tolerance) {
  const double defect = std::abs(m.determinant() - 1.0);
  if (defect > tolerance) {
    throw DomainError("SL2C: determinant differs from 1 by " + std::to_string(defect));
  }
  return SL2C(m, 0);
}

SL2C SL2C::normalized(const Mat2& m) {
  const Complex det = m.determinant();
  if (std::abs(det) == 0.0) throw DomainError("SL2C::normalized: singular matrix");
  return SL2C(m / std::sqrt(det), 0);
}

SL2C SL2C::inverse() const {
  // det = 1, so the inverse is the adjugate.
  Mat2 inv;
  inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  return SL2C(inv, 0);
}

SL2C SL2C::adjoint() const { return SL2C(m_.adjoint(), 0); }

FourVector LorentzMatrix::apply(const FourVector& x) const {
  FourVector y;
  for (int mu = 0; mu < 4; ++mu) {
    double acc = 0.0;
    for (int nu = 0; nu < 4; ++nu) acc += m(mu, nu) * x[nu];
    y[mu] = acc;
  }
  return y;
}

LorentzMatrix LorentzMatrix::inverse() const {
  // Lambda^{-1} = eta Lambda^T eta
  const Eigen::Vector4d eta(1.0, -1.0, -1.0, -1.0);
  return {eta.asDiagonal() * m.transpose() * eta.asDiagonal()};
}

double LorentzMatrix::metric_defect() const {
  const Eigen::Matrix4d eta = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return max_abs(Mat4(m.transpose() * eta * m - eta));
}

LorentzMatrix covering_map(const Mat2& a) {
  LorentzMatrix lambda;
  for (int nu = 0; nu < 4; ++nu) {
    const FourVector column = read_hermitian(a * sigma(nu) * a.adjoint());
    for (int mu = 0; mu < 4; ++mu) lambda.m(mu, nu) = column[mu];
  }
  return lambda;
}

FourVector act(const Mat2& a, const FourVector& p) {
  return read_hermitian(a * to_hermitian(p) * a.adjoint());
}

FourVector act_inverse(const Mat2& a, const FourVector& p) {
  const Mat2 inv = a.inverse();
  return read_hermitian(inv * to_hermitian(p) * inv.adjoint());
}

Mat2 hat_with(const Mat2& eps, const Mat2& a) { return eps * a.conjugate() * eps.inverse(); }

Mat2 hat(const Mat2& a) {
  // eps conj(A) eps^{-1} written out for eps = [[0,1],[-1,0]].
  Mat2 h;
  h << std::conj(a(1, 1)), -std::conj(a(1, 0)), -std::conj(a(0, 1)), std::conj(a(0, 0));
  return h;
}

SL2C exp_traceless(const Mat2& x) {
  // X^2 = mu^2 1 with mu^2 = -det X, so exp X = cosh(mu) 1 + sinh(mu)/mu X.
  const Complex mu2 = -x.determinant();
  const Complex mu = std::sqrt(mu2);
  Complex c;
  Complex s;
  if (std::abs(mu) < 1e-4) {
    c = 1.0 + mu2 / 2.0 + mu2 * mu2 / 24.0 + mu2 * mu2 * mu2 / 720.0;
    s = 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0 + mu2 * mu2 * mu2 / 5040.0;
  } else {
    c = std::cosh(mu);
    s = std::sinh(mu) / mu;
  }
  const Mat2 e = c * Mat2::Identity() + s * x;
  return SL2C::normalized(e);
}

SL2C random_sl2c(Rng& rng) {
  auto entry = [&] { return Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)); };
  const Complex d = entry();
  const Complex b = entry();
  const Complex c = entry();
  Mat2 x;
  x << d, b, c, -d;
  return exp_traceless(x);
}

SL2C random_su2(Rng& rng) {
  Eigen::Vector3d n;
  do {
    n = Eigen::Vector3d(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
  } while (n.norm() > 1.0 || n.norm() < 1e-3);
  const Eigen::Vector3d theta = M_PI * n;
  Mat2 x = Mat2::Zero();
  for (int k = 0; k < 3; ++k) x += Complex(0.0, -0.5 * theta[k]) * sigma(k + 1);
  return exp_traceless(x);
}

FourVector random_four_vector(Rng& rng, double scale) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale),
          uniform(rng, -scale, scale)};
}

FourVector on_shell(double mass, double px, double py, double pz) {
  return {std::sqrt(px * px + py * py + pz * pz + mass * mass), px, py, pz};
}

FourVector random_on_shell(Rng& rng, double mass, double scale) {
  return on_shell(mass, uniform(rng, -scale, scale), uniform(rng, -scale, scale),
                  uniform(rng, -scale, scale));
}

}  // namespace poincare
