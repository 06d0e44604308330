#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poincare/minkowski.hpp"

using namespace poincare;

TEST_CASE("metric and hermitian encoding") {
  CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
  CHECK(minkowski_dot({0, 0, 0, 1}, {0, 0, 0, 1}) == -1.0);
  CHECK(max_abs(Mat2(to_hermitian({1, 0, 0, 0}) - Mat2::Identity())) == 0.0);
  Mat2 d;
  d << 1.0, 0.0, 0.0, -1.0;
  CHECK(max_abs(Mat2(to_hermitian({0, 0, 0, 1}) - d)) == 0.0);

  CHECK(from_hermitian(Mat2::Identity()) == FourVector(1, 0, 0, 0));
  Mat2 lightlike = Mat2::Zero();
  lightlike(0, 0) = 2.0;
  CHECK(from_hermitian(lightlike) == FourVector(1, 0, 0, 1));
  CHECK(from_hermitian(sigma(1)) == FourVector(0, 1, 0, 0));

  Mat2 bad = Mat2::Zero();
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(from_hermitian(bad), DomainError);

  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const FourVector x = random_four_vector(rng, 2.0);
    CHECK(std::abs(to_hermitian(x).determinant().real() - minkowski_dot(x, x)) < 1e-12);
    const FourVector y = from_hermitian(to_hermitian(x));
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(y[mu] - x[mu]) < 1e-15);
  }
}

TEST_CASE("covering map") {
  CHECK(max_abs(covering_map(Mat2::Identity()).m - Mat4::Identity()) == 0.0);
  CHECK(max_abs(covering_map(-Mat2::Identity()).m - Mat4::Identity()) == 0.0);

  // diag(e^{t/2}, e^{-t/2}) is the z boost with rapidity t
  const double t = 0.7;
  Mat2 a = Mat2::Zero();
  a(0, 0) = std::exp(t / 2);
  a(1, 1) = std::exp(-t / 2);
  Mat4 boost = Mat4::Identity();
  boost(0, 0) = boost(3, 3) = std::cosh(t);
  boost(0, 3) = boost(3, 0) = std::sinh(t);
  CHECK(max_abs(covering_map(a).m - boost) < 1e-14);

  Rng rng(11);
  double hom = 0.0;
  double kernel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SL2C x = random_sl2c(rng);
    const SL2C y = random_sl2c(rng);
    hom = std::max(hom, max_abs(covering_map(x * y).m - covering_map(x).m * covering_map(y).m));
    kernel = std::max(kernel, max_abs(covering_map(x).m - covering_map(-x).m));
    const LorentzMatrix l = covering_map(x);
    CHECK(l.metric_defect() < 1e-11);
    CHECK(l.m.determinant() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(l.m(0, 0) >= 1.0);
    const FourVector p = random_four_vector(rng);
    const FourVector q = l.apply(p);
    CHECK(max_abs(Mat2(to_hermitian(q) - x.matrix() * to_hermitian(p) * x.matrix().adjoint())) < 1e-12);
    const FourVector back = act_inverse(x, act(x, p));
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(back[mu] - p[mu]) < 1e-11);
  }
  CHECK(hom < 1e-12);
  CHECK(kernel <= 1e-15);

  for (int i = 0; i < 100; ++i) {
    const LorentzMatrix r = covering_map(random_su2(rng));
    CHECK(std::abs(r.m(0, 0) - 1.0) < 1e-12);
    CHECK(r.m.row(0).tail(3).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(r.m.col(0).tail(3).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hat") {
  CHECK(max_abs(Mat2(hat(Mat2::Identity()) - Mat2::Identity())) == 0.0);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const SL2C a = random_sl2c(rng);
    CHECK(max_abs(Mat2(hat(a) * a.matrix().adjoint() - Mat2::Identity())) < 1e-12);
    CHECK(max_abs(Mat2(hat(hat(a)) - a.matrix())) == 0.0);
    CHECK(max_abs(Mat2(hat_with(epsilon(), a) - hat(a))) < 1e-15);
    const FourVector p = random_on_shell(rng, 1.3);
    CHECK(max_abs(Mat2(to_hermitian(p) * hat(to_hermitian(p)) - 1.69 * Mat2::Identity())) < 1e-12);
  }
  // the overall sign of eps drops out; a symmetric choice does not invert A^dagger
  const SL2C a = random_sl2c(rng);
  CHECK(max_abs(Mat2(hat_with(-epsilon(), a) - hat(a))) < 1e-15);
  Mat2 sym;
  sym << 0.0, 1.0, 1.0, 0.0;
  CHECK(max_abs(Mat2(hat_with(sym, a) * a.matrix().adjoint() - Mat2::Identity())) > 1e-3);
}

TEST_CASE("SL2C validation") {
  Mat2 m = 2.0 * Mat2::Identity();
  CHECK_THROWS_AS(SL2C::from(m), DomainError);
  CHECK(std::abs(SL2C::normalized(m).matrix().determinant() - 1.0) < 1e-15);
  CHECK_THROWS_AS(SL2C::normalized(Mat2::Zero()), DomainError);
  Rng rng(5);
  const SL2C a = random_sl2c(rng);
  CHECK(std::abs(a.matrix().determinant() - 1.0) < 1e-12);
  CHECK(max_abs(Mat2((a * a.inverse()).matrix() - Mat2::Identity())) < 1e-12);
}
