#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "poincare/irreps.hpp"

using namespace poincare;

TEST_CASE("spin_rep basics") {
  Rng rng(1);
  for (int n = 0; n <= 6; ++n) {
    const SpinLabel s(n);
    CHECK(max_abs(MatX(spin_rep(s, Mat2::Identity()) - MatX::Identity(n + 1, n + 1))) < 1e-15);
  }
  const SL2C a = random_sl2c(rng);
  CHECK(max_abs(MatX(spin_rep(SpinLabel(1), a) - MatX(a.matrix()))) == 0.0);
  CHECK(spin_rep(SpinLabel(0), a)(0, 0) == Complex(1.0));
  CHECK_THROWS_AS(SpinLabel(-1), DomainError);
  CHECK(SpinLabel(3).twice_lambda(0) == 3);
  CHECK(SpinLabel(3).twice_lambda(3) == -3);
}

TEST_CASE("Kronecker symmetrization oracle") {
  Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const SL2C a = random_sl2c(rng);
      worst = std::max(worst, max_abs(MatX(spin_rep(SpinLabel(n), a) - oracle::symmetric_power(a.matrix(), n))));
    }
    CHECK(worst < 1e-10);
    CHECK(max_abs(MatX(symmetric_embedding(SpinLabel(n)) - oracle::symmetrizer_columns(n))) < 1e-14);
  }
}

TEST_CASE("representation properties") {
  Rng rng(3);
  for (int n = 0; n <= 6; ++n) {
    const SpinLabel s(n);
    double hom = 0.0;
    double unit = 0.0;
    double det = 0.0;
    double hat_inv = 0.0;
    for (int i = 0; i < 200; ++i) {
      const SL2C a = random_sl2c(rng);
      const SL2C b = random_sl2c(rng);
      const MatX da = spin_rep(s, a);
      const MatX db = spin_rep(s, b);
      // relative to the entry scale of the factors, which grows like |A|^{2s}
      hom = std::max(hom, max_abs(MatX(spin_rep(s, a * b) - da * db)) / (max_abs(da) * max_abs(db)));
      const MatX u = spin_rep(s, random_su2(rng));
      unit = std::max(unit, max_abs(MatX(u * u.adjoint() - MatX::Identity(n + 1, n + 1))));
      det = std::max(det, std::abs(da.determinant() - 1.0));
      const MatX ha = hat_rep(s, a);
      hat_inv = std::max(hat_inv, max_abs(MatX(ha * da.adjoint() - MatX::Identity(n + 1, n + 1))) /
                                      (max_abs(ha) * max_abs(da)));
    }
    CHECK(hom < 1e-12);
    CHECK(unit < 1e-12);
    CHECK(det < 1e-10);
    CHECK(hat_inv < 1e-12);
  }
  const SL2C r = random_su2(rng);
  CHECK(max_abs(MatX(hat_rep(SpinLabel(3), r) - spin_rep(SpinLabel(3), r))) < 1e-12);
  const SL2C a = random_sl2c(rng);
  CHECK(max_abs(MatX(hat_rep(SpinLabel(1), a) - MatX(a.matrix().adjoint().inverse()))) < 1e-12);
}

TEST_CASE("generators") {
  // J3 = diag(s, ..., -s); [J1, J2] = i J3; Casimir s(s+1)
  for (int n = 0; n <= 5; ++n) {
    const SpinLabel s(n);
    const auto j = angular_momentum(s);
    const Complex i(0.0, 1.0);
    for (int k = 0; k <= n; ++k) CHECK(std::abs(j[2](k, k) - 0.5 * s.twice_lambda(k)) < 1e-14);
    CHECK(max_abs(MatX(j[0] * j[1] - j[1] * j[0] - i * j[2])) < 1e-12);
    const MatX c = j[0] * j[0] + j[1] * j[1] + j[2] * j[2];
    CHECK(max_abs(MatX(c - s.value() * (s.value() + 1) * MatX::Identity(n + 1, n + 1))) < 1e-12);
    // derivative of spin_rep along a generator
    const Mat2 x = Complex(0.0, 0.3) * sigma(1) + 0.2 * sigma(3);
    const double h = 1e-6;
    const MatX num = (spin_rep(s, exp_traceless(h * x)) - spin_rep(s, exp_traceless(-h * x))) / (2 * h);
    CHECK(max_abs(MatX(num - spin_generator(s, x))) < 1e-8);
  }
}

TEST_CASE("generalized sigma") {
  const GeneralizedSigma s0 = extract_sigma(SpinLabel(0));
  REQUIRE(s0.size() == 1);
  CHECK(std::abs(s0.sigma[0](0, 0) - 1.0) < 1e-14);

  // s = 1/2: sigma^mu contracted with lowered p, so the contravariant tensors are (1, -sigma_k)
  const GeneralizedSigma s1 = extract_sigma(SpinLabel(1));
  REQUIRE(s1.size() == 4);
  for (int mu = 0; mu < 4; ++mu) {
    const int idx[1] = {mu};
    const double sign = mu == 0 ? 1.0 : -1.0;
    CHECK(max_abs(MatX(s1.component(idx) - sign * MatX(sigma(mu)))) < 1e-12);
    CHECK(max_abs(MatX(s1.hat_component(idx) - (mu == 0 ? 1.0 : -sign) * MatX(sigma(mu)))) < 1e-12);
  }

  Rng rng(4);
  for (int n = 0; n <= 4; ++n) {
    const SpinLabel s(n);
    const GeneralizedSigma g = extract_sigma(s);
    CHECK(g.size() == static_cast<std::size_t>((n + 3) * (n + 2) * (n + 1) / 6));
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const FourVector p = random_four_vector(rng, 2.0);
      worst = std::max(worst, max_abs(MatX(g.contract(p) - spin_rep(s, to_hermitian(p)))));
      worst = std::max(worst, max_abs(MatX(g.contract_hat(p) - spin_rep(s, hat(to_hermitian(p))))));
    }
    CHECK(worst < 1e-10);
  }
  const int bad[2] = {0, 4};
  CHECK_THROWS_AS(extract_sigma(SpinLabel(2)).class_of(bad), DomainError);
}

TEST_CASE("gamma matrices") {
  const GammaSet g = gamma_matrices(SpinLabel(1));
  const Eigen::Vector4d eta(1, -1, -1, -1);
  // classes for degree 1 are ordered (1,0,0,0), (0,1,0,0), (0,0,1,0), (0,0,0,1)
  std::array<MatX, 4> gm;
  for (int mu = 0; mu < 4; ++mu) {
    const int idx[1] = {mu};
    gm[static_cast<std::size_t>(mu)] = g.gamma[extract_sigma(SpinLabel(1)).class_of(idx)];
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const MatX ac = gm[mu] * gm[nu] + gm[nu] * gm[mu];
      const MatX expect = (mu == nu ? 2.0 * eta[mu] : 0.0) * MatX::Identity(4, 4);
      CHECK(max_abs(MatX(ac - expect)) < 1e-14);
    }
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const FourVector p = random_four_vector(rng);
    const MatX gp = g.contract(p);
    CHECK(max_abs(MatX(gp * gp - minkowski_dot(p, p) * MatX::Identity(4, 4))) < 1e-12);
  }
  for (int n = 0; n <= 3; ++n) {
    const GammaSet gs = gamma_matrices(SpinLabel(n));
    for (const MatX& m : gs.gamma) {
      CHECK(max_abs(MatX(m.topLeftCorner(n + 1, n + 1))) == 0.0);
      CHECK(max_abs(MatX(m.bottomRightCorner(n + 1, n + 1))) == 0.0);
    }
  }
}
