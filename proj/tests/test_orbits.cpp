#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poincare/irreps.hpp"
#include "poincare/orbits.hpp"

using namespace poincare;

namespace {
double defect4(const Mat2& l, const FourVector& p, double m) {
  return max_abs(Mat2(l * l.adjoint() - to_hermitian(p) / m));
}
}  // namespace

TEST_CASE("canonical boost") {
  const double m = 1.0;
  CHECK(max_abs(Mat2(canonical_boost(m, {m, 0, 0, 0}).matrix() - Mat2::Identity())) < 1e-15);
  const FourVector p(std::sqrt(2.0), 0, 0, 1);
  const Mat2 expect = (Mat2::Identity() + to_hermitian(p)) / std::sqrt(2.0 * (1.0 + std::sqrt(2.0)));
  const SL2C l = canonical_boost(m, p);
  CHECK(max_abs(Mat2(l.matrix() - expect)) < 1e-15);
  CHECK(max_abs(Mat2(l.matrix() - l.matrix().adjoint())) < 1e-15);
  Eigen::SelfAdjointEigenSolver<Mat2> es(l.matrix());
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  CHECK(defect4(l, p, m) < 1e-12);
  CHECK_THROWS_AS(canonical_boost(1.0, {1.0, 0.5, 0, 0}), DomainError);
  CHECK_THROWS_AS(canonical_boost(1.0, {-1.0, 0, 0, 0}), DomainError);
}

TEST_CASE("both sections satisfy L L^dagger = p/m") {
  Rng rng(1);
  double can = 0.0;
  double hel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double m = 0.5 + std::uniform_real_distribution<double>(0, 2)(rng);
    const FourVector p = random_on_shell(rng, m);
    can = std::max(can, defect4(canonical_boost(m, p), p, m));
    const HelicityBoost h = helicity_boost(m, p);
    hel = std::max(hel, defect4(h.boost(), p, m));
    CHECK(max_abs(Mat2(h.rotation.matrix() * h.rotation.matrix().adjoint() - Mat2::Identity())) < 1e-14);
    CHECK(h.phi >= 0.0);
    CHECK(h.phi < 2.0 * M_PI);
  }
  CHECK(can < 1e-12);
  CHECK(hel < 1e-12);

  const HelicityBoost z = helicity_boost(1.0, on_shell(1.0, 0, 0, 2.0));
  CHECK(max_abs(Mat2(z.rotation.matrix() - Mat2::Identity())) < 1e-15);
  CHECK(std::abs(z.dilation(0, 0) - std::sqrt(std::sqrt(5.0) + 2.0)) < 1e-14);
  CHECK(std::abs(z.dilation(1, 1) - std::sqrt(std::sqrt(5.0) - 2.0)) < 1e-14);
  const HelicityBoost rest = helicity_boost(1.0, {1, 0, 0, 0});
  CHECK(max_abs(Mat2(rest.boost().matrix() - Mat2::Identity())) < 1e-15);
}

TEST_CASE("Wigner rotations") {
  Rng rng(2);
  const double m = 1.2;
  for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
    double unit = 0.0;
    double det = 0.0;
    double cocycle = 0.0;
    for (int i = 0; i < 200; ++i) {
      const FourVector p = random_on_shell(rng, m);
      const SL2C a = random_sl2c(rng);
      const SL2C b = random_sl2c(rng);
      const SL2C w = wigner_rotation(c, m, p, a);
      unit = std::max(unit, max_abs(Mat2(w.matrix().adjoint() * w.matrix() - Mat2::Identity())));
      det = std::max(det, std::abs(w.matrix().determinant() - 1.0));
      const SL2C lhs = wigner_rotation(c, m, p, a * b);
      const SL2C rhs = wigner_rotation(c, m, act(b, p), a) * wigner_rotation(c, m, p, b);
      cocycle = std::max(cocycle, max_abs(Mat2(lhs.matrix() - rhs.matrix())));
    }
    CHECK(unit < 1e-12);
    CHECK(det < 1e-12);
    CHECK(cocycle < 1e-10);
  }
  // W(pi, L(q)) = 1 and W(p, R) = R for the canonical section
  const FourVector q = random_on_shell(rng, m);
  CHECK(max_abs(Mat2(wigner_rotation(BoostChoice::canonical, m, {m, 0, 0, 0}, canonical_boost(m, q)).matrix() -
                     Mat2::Identity())) < 1e-12);
  for (int i = 0; i < 100; ++i) {
    const SL2C r = random_su2(rng);
    const FourVector p = random_on_shell(rng, m);
    CHECK(max_abs(Mat2(wigner_rotation(BoostChoice::canonical, m, p, r).matrix() - r.matrix())) < 1e-12);
  }
}

TEST_CASE("helicity interpretation") {
  Rng rng(3);
  for (int n = 1; n <= 4; ++n) {
    const SpinLabel s(n);
    const auto j = angular_momentum(s);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const FourVector p = random_on_shell(rng, 1.0);
      const HelicityBoost h = helicity_boost(1.0, p);
      const Eigen::Vector3d nh = Eigen::Vector3d(p[1], p[2], p[3]).normalized();
      const MatX d = spin_rep(s, h.rotation);
      const MatX lhs = d * j[2] * d.adjoint();
      const MatX rhs = nh[0] * j[0] + nh[1] * j[1] + nh[2] * j[2];
      worst = std::max(worst, max_abs(MatX(lhs - rhs)));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("massless orbit") {
  const FourVector pi(0.5, 0, 0, 0.5);
  CHECK(max_abs(Mat2(massless_boost(pi).matrix() - Mat2::Identity())) < 1e-15);
  const double e = 1.7;
  const SL2C l = massless_boost({e, 0, 0, e});
  Mat2 d = Mat2::Zero();
  d(0, 0) = std::sqrt(2 * e);
  d(1, 1) = 1 / std::sqrt(2 * e);
  CHECK(max_abs(Mat2(l.matrix() - d)) < 1e-15);
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const FourVector v = random_four_vector(rng, 3.0);
    const FourVector p(std::sqrt(v[1] * v[1] + v[2] * v[2] + v[3] * v[3]), v[1], v[2], v[3]);
    const SL2C b = massless_boost(p);
    CHECK(max_abs(Mat2(b.matrix() * to_hermitian(pi) * b.matrix().adjoint() - to_hermitian(p))) < 1e-12);
    const SL2C a = random_sl2c(rng);
    const SL2C w = wigner_rotation(BoostChoice::canonical, 0.0, p, a);
    const MasslessLittle x = massless_little_group_decompose(w);
    CHECK(max_abs(Mat2(x.matrix() - w.matrix())) < 1e-9);
  }
  CHECK_THROWS_AS(massless_boost({1e-12, 0, 0, 1e-12}), DomainError);
  CHECK_THROWS_AS(massless_little_group_decompose(canonical_boost(1.0, on_shell(1.0, 0.3, 0, 0))), DomainError);

  const MasslessLittle id = massless_little_group_decompose(Mat2::Identity());
  CHECK(std::abs(id.a) == 0.0);
  CHECK(id.phi == 0.0);
  const double phi = 1.1;
  Mat2 r = Mat2::Zero();
  r(0, 0) = std::exp(Complex(0, phi / 2));
  r(1, 1) = std::exp(Complex(0, -phi / 2));
  const MasslessLittle rot = massless_little_group_decompose(r);
  CHECK(std::abs(rot.a) < 1e-15);
  CHECK(std::abs(rot.phi - phi) < 1e-14);

  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const MasslessLittle x{Complex(u(rng), u(rng)), wrap_angle(3 * u(rng), 4 * M_PI)};
    const MasslessLittle y{Complex(u(rng), u(rng)), wrap_angle(3 * u(rng), 4 * M_PI)};
    const MasslessLittle prod = massless_little_group_decompose(x.matrix() * y.matrix());
    const MasslessLittle law = x * y;
    CHECK(std::abs(prod.a - law.a) < 1e-12);
    const double dphi = wrap_angle(prod.phi - law.phi + 1.0, 4 * M_PI) - 1.0;
    CHECK(std::abs(dphi) < 1e-12);
  }
}
