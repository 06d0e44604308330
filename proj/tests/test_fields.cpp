#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poincare/fields.hpp"
#include "test_support.hpp"

using namespace poincare;
using support::random_wave;

namespace {

const GridPtr& grid() {
  static const GridPtr g = make_grid({1.0, 6.0, 16, "lebedev26"});
  return g;
}

double wigner_norm(const WaveFunction& f) { return inner_product(f, f).real(); }

double max_diff(const WaveFunction& a, const WaveFunction& b) { return max_abs(MatX(a.amp - b.amp)); }

double rel_diff(const Field& a, const Field& b) {
  return max_abs(MatX(a.values - b.values)) / max_abs(b.values);
}

}  // namespace

TEST_CASE("scalar fields are the amplitude itself") {
  const WaveFunction f = random_wave(grid(), SpinLabel(0), 1);
  const Field phi = phi_from_f(f);
  const Field chi = chi_from_f(f);
  CHECK(max_abs(MatX(phi.values - f.amp)) == 0.0);
  CHECK(max_abs(MatX(chi.values - phi.values)) == 0.0);
  const auto d = duality_check(phi, chi);
  CHECK(d.chi_from_phi < 1e-15);
  CHECK(generalized_dirac_residual(bispinor(phi, chi)) < 1e-15);
}

TEST_CASE("at the standard momentum the field equals the amplitude") {
  for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity})
    CHECK(max_abs(Mat2(boost(c, 1.0, {1, 0, 0, 0}).matrix() - Mat2::Identity())) == 0.0);
  // every node of this grid is within 1e-6 of pi, and |D(L) - 1| is about 2s |p| / 2m
  const auto tiny = make_grid({1.0, 1e-6, 4, "lebedev26"});
  const WaveFunction f = random_wave(tiny, SpinLabel(3), 2);
  CHECK(max_abs(MatX(phi_from_f(f).values - f.amp)) < 3e-6 * max_abs(f.amp));
  CHECK(max_abs(MatX(chi_from_f(f).values - f.amp)) < 3e-6 * max_abs(f.amp));
}

TEST_CASE("field norms reproduce the Wigner norm") {
  for (int twice : {1, 2, 3, 4}) {
    CAPTURE(twice);
    const SpinLabel s(twice);
    for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
      const WaveFunction f = random_wave(grid(), s, 10 + static_cast<std::uint64_t>(twice));
      const double n = wigner_norm(f);
      CHECK(std::abs(field_norm(phi_from_f(f, c)) - n) < 1e-10 * n);
      CHECK(std::abs(field_norm(chi_from_f(f, c)) - n) < 1e-10 * n);
      CHECK(std::abs(field_norm(bispinor_from_f(f, c)) - n) < 1e-10 * n);
      CHECK(std::abs(field_norm(bw_construct(f, c)) - n) < 1e-10 * n);
      for (int dotted = 0; dotted <= twice; ++dotted)
        CHECK(std::abs(field_norm(pf_construct(f, dotted, c)) - n) < 1e-10 * n);
    }
  }
}

TEST_CASE("the literal one-half in the multispinor product is off by 2^{2s-1}") {
  // psi^dagger (x)gamma^0 psi = 2^{2s} |f|^2 pointwise since B^dagger gamma^0 B = 2
  for (int twice : {1, 2, 3}) {
    const WaveFunction f = random_wave(grid(), SpinLabel(twice), 20);
    const double with_2s = field_norm(bw_construct(f));
    const double literal_half = 0.5 * std::ldexp(with_2s, twice);
    CHECK(std::abs(literal_half / wigner_norm(f) - std::ldexp(1.0, twice - 1)) < 1e-10);
  }
  const MatX b = dirac_column(BoostChoice::canonical, 1.3, on_shell(1.3, 0.4, -2.0, 0.7));
  CHECK(max_abs(MatX(b.adjoint() * dirac_gammas()[0] * b - 2.0 * MatX::Identity(2, 2))) < 1e-12);
}

TEST_CASE("duality between the two spinor types") {
  SUBCASE("spin 1/2 is the momentum-space Dirac pair") {
    const WaveFunction f = random_wave(grid(), SpinLabel(1), 3);
    const Field phi = phi_from_f(f);
    const Field chi = chi_from_f(f);
    const auto d = duality_check(phi, chi);
    CHECK(d.chi_from_phi < 1e-12);
    CHECK(d.phi_from_chi < 1e-12);
    double worst = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const Mat2 p = to_hermitian(grid()->node(k));
      const VecX a = phi.at(k);
      const VecX b = chi.at(k);
      worst = std::max(worst, (hat(p) * a - b).norm() / (p.norm() * a.norm()));
      worst = std::max(worst, (p * b - a).norm() / (p.norm() * b.norm()));
    }
    CHECK(worst < 1e-12);
  }
  for (int twice : {2, 3, 4, 6}) {
    CAPTURE(twice);
    const WaveFunction f = random_wave(grid(), SpinLabel(twice), 4);
    for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
      const auto d = duality_check(phi_from_f(f, c), chi_from_f(f, c));
      CHECK(d.chi_from_phi < 1e-10);
      CHECK(d.phi_from_chi < 1e-10);
    }
  }
  SUBCASE("mismatched fields are caught") {
    const WaveFunction f = random_wave(grid(), SpinLabel(3), 5);
    const WaveFunction g = random_wave(grid(), SpinLabel(3), 6);
    CHECK(duality_check(phi_from_f(f), chi_from_f(g)).chi_from_phi > 1e-2);
  }
}

TEST_CASE("generalized Dirac equation") {
  const WaveFunction half = random_wave(grid(), SpinLabel(1), 7);
  const Field psi = bispinor_from_f(half);
  CHECK(generalized_dirac_residual(psi) < 1e-12);
  // the s = 1/2 operator is gamma.p - m with the chiral gammas
  const GammaSet g1 = gamma_matrices(SpinLabel(1));
  Rng rng(8);
  for (int t = 0; t < 5; ++t) {
    const FourVector p = random_four_vector(rng, 2.0);
    MatX slash = MatX::Zero(4, 4);
    for (int mu = 0; mu < 4; ++mu) slash += p.lowered()[mu] * dirac_gammas()[static_cast<std::size_t>(mu)];
    CHECK(max_abs(MatX(g1.contract(p) - slash)) < 1e-13);
  }
  for (int twice : {2, 3, 4}) {
    CAPTURE(twice);
    const SpinLabel s(twice);
    const Field b = bispinor_from_f(random_wave(grid(), s, 9));
    CHECK(generalized_dirac_residual(b) < 1e-10);
    // an overall sign on the tensor (the x-space factor read literally for integer s) fails
    GammaSet flipped = gamma_matrices(s);
    for (auto& m : flipped.gamma) m = -m;
    CHECK(generalized_dirac_residual(b, flipped) > 0.1);
  }
}

TEST_CASE("Bargmann-Wigner multispinors") {
  SUBCASE("spin 1/2 is the Dirac spinor (phi, chi)") {
    const WaveFunction f = random_wave(grid(), SpinLabel(1), 11);
    CHECK(max_abs(MatX(bw_construct(f).values - bispinor_from_f(f).values)) < 1e-15);
  }
  for (int twice : {1, 2, 3, 4}) {
    CAPTURE(twice);
    const WaveFunction f = random_wave(grid(), SpinLabel(twice), 12);
    const Field psi = bw_construct(f);
    CHECK(psi.values.cols() == 1 << (2 * twice));
    CHECK(bw_symmetry_defect(psi) < 1e-15);
    for (double r : bw_residual(psi)) CHECK(r < 1e-10);
    CHECK(bw_residual(psi).size() == static_cast<std::size_t>(twice));
  }
  SUBCASE("Dirac identity for B") {
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
      const double m = 0.5 + t * 0.2;
      const FourVector p = random_on_shell(rng, m);
      MatX slash = MatX::Zero(4, 4);
      for (int mu = 0; mu < 4; ++mu) slash += p.lowered()[mu] * dirac_gammas()[static_cast<std::size_t>(mu)];
      for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
        const MatX b = dirac_column(c, m, p);
        CHECK(max_abs(MatX(slash * b / m - b)) < 1e-12 * p[0]);
      }
    }
  }
}

TEST_CASE("Pauli-Fierz fields") {
  SUBCASE("identity p hat(L) = m L") {
    Rng rng(14);
    for (int t = 0; t < 20; ++t) {
      const double m = 0.3 + 0.1 * t;
      const FourVector p = random_on_shell(rng, m);
      for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
        const SL2C l = boost(c, m, p);
        const Mat2 ph = to_hermitian(p);
        CHECK(max_abs(Mat2(ph * hat(l) - m * l.matrix())) < 1e-12 * p[0]);
        CHECK(max_abs(Mat2(hat(ph) * l.matrix() - m * hat(l))) < 1e-12 * p[0]);
      }
    }
  }
  SUBCASE("all undotted: symmetric unfolding of phi") {
    for (int twice : {1, 2, 3, 4}) {
      const SpinLabel s(twice);
      const WaveFunction f = random_wave(grid(), s, 15);
      const Field pf = pf_construct(f, 0);
      const Field phi = phi_from_f(f);
      const MatX unfolded = phi.values * symmetric_embedding(s).transpose();
      CHECK(max_abs(MatX(pf.values - unfolded)) < 1e-12 * max_abs(unfolded));
      const Field pf_dot = pf_construct(f, twice);
      const MatX unfolded_chi = chi_from_f(f).values * symmetric_embedding(s).transpose();
      CHECK(max_abs(MatX(pf_dot.values - unfolded_chi)) < 1e-12 * max_abs(unfolded_chi));
    }
  }
  SUBCASE("spin 1/2: the Weyl halves, and the relations are the Dirac pair") {
    const WaveFunction f = random_wave(grid(), SpinLabel(1), 16);
    CHECK(max_abs(MatX(pf_construct(f, 0).values - phi_from_f(f).values)) == 0.0);
    CHECK(max_abs(MatX(pf_construct(f, 1).values - chi_from_f(f).values)) == 0.0);
    const PFResidual r0 = pf_residual(pf_construct(f, 0), f);
    const PFResidual r1 = pf_residual(pf_construct(f, 1), f);
    CHECK(r0.undotted_to_dotted < 1e-12);
    CHECK(std::isnan(r0.dotted_to_undotted));
    CHECK(r1.dotted_to_undotted < 1e-12);
    CHECK(std::isnan(r1.undotted_to_dotted));
  }
  for (int twice : {2, 3, 4}) {
    const WaveFunction f = random_wave(grid(), SpinLabel(twice), 17);
    for (int dotted = 0; dotted <= twice; ++dotted) {
      CAPTURE(twice);
      CAPTURE(dotted);
      const PFResidual r = pf_residual(pf_construct(f, dotted), f);
      if (dotted < twice) CHECK(r.undotted_to_dotted < 1e-10);
      if (dotted > 0) CHECK(r.dotted_to_undotted < 1e-10);
    }
  }
  const WaveFunction f = random_wave(grid(), SpinLabel(2), 18);
  CHECK_THROWS_AS(pf_construct(f, 3), DomainError);
  CHECK_THROWS_AS(pf_construct(f, -1), DomainError);
}

TEST_CASE("Rarita-Schwinger vector-spinor") {
  const SpinLabel s(3);
  for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
    const WaveFunction f = random_wave(grid(), s, 19);
    const Field psi = rarita_schwinger(f, c);
    const RSResidual r = rs_residual(psi);
    CHECK(r.dirac < 1e-10);
    CHECK(r.subsidiary < 1e-10);
    const double n = wigner_norm(f);
    CHECK(std::abs(field_norm(psi) - n) < 1e-10 * n);
  }
  SUBCASE("rest-frame map is an injective isometry") {
    const MatX map = rs_rest_map();
    CHECK(map.rows() == 16);
    const Eigen::VectorXd sv = Eigen::JacobiSVD<MatX>(map).singularValues();
    CHECK(sv.size() == 4);
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(std::abs(sv[i] - 1.0) < 1e-12);
    CHECK(max_abs(MatX(map.adjoint() * map - MatX::Identity(4, 4))) < 1e-12);
    // at rest the time component vanishes
    CHECK(max_abs(MatX(map.topRows(4))) < 1e-15);
  }
  SUBCASE("the subsidiary condition needs the lowered index") {
    const Field psi = rarita_schwinger(random_wave(grid(), s, 20));
    double worst = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k) {
      VecX contracted = VecX::Zero(4);
      for (int mu = 0; mu < 4; ++mu) {
        const double raise = mu == 0 ? 1.0 : -1.0;
        // gamma^mu contracted with psi^mu instead of psi_mu
        contracted += dirac_gammas()[static_cast<std::size_t>(mu)] * psi.at(k).segment(4 * mu, 4) * raise;
      }
      worst = std::max(worst, contracted.norm() / psi.at(k).norm());
    }
    CHECK(worst > 0.1);
  }
  CHECK_THROWS_AS(rarita_schwinger(random_wave(grid(), SpinLabel(1), 21)), DomainError);
}

TEST_CASE("every construction inverts back to the Wigner amplitude") {
  for (int twice : {1, 2, 3, 4}) {
    CAPTURE(twice);
    const SpinLabel s(twice);
    const WaveFunction f = random_wave(grid(), s, 22);
    const double scale = max_abs(f.amp);
    for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
      CHECK(max_diff(to_wigner(phi_from_f(f, c)), f) < 1e-10 * scale);
      CHECK(max_diff(to_wigner(chi_from_f(f, c)), f) < 1e-10 * scale);
      CHECK(max_diff(to_wigner(bispinor_from_f(f, c)), f) < 1e-10 * scale);
      CHECK(max_diff(to_wigner(bw_construct(f, c)), f) < 1e-10 * scale);
      for (int dotted = 0; dotted <= twice; ++dotted) CHECK(max_diff(to_wigner(pf_construct(f, dotted, c)), f) < 1e-10 * scale);
      if (twice == 3) CHECK(max_diff(to_wigner(rarita_schwinger(f, c)), f) < 1e-10 * scale);
    }
  }
}

TEST_CASE("covariance on grid-preserving transformations") {
  Rng rng(23);
  const auto& group = binary_octahedral();
  for (int twice : {1, 2, 3}) {
    CAPTURE(twice);
    const SpinLabel s(twice);
    const WaveFunction f = random_wave(grid(), s, 24);
    for (int t = 0; t < 6; ++t) {
      const PoincareElement g{random_four_vector(rng, 1.5), group[static_cast<std::size_t>(7 * t + 3) % group.size()]};
      for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
        const WaveFunction uf = rep_apply(g, f, c);
        CHECK(rel_diff(field_apply(g, phi_from_f(f, c)), phi_from_f(uf, c)) < 1e-12);
        CHECK(rel_diff(field_apply(g, chi_from_f(f, c)), chi_from_f(uf, c)) < 1e-12);
        CHECK(rel_diff(field_apply(g, bispinor_from_f(f, c)), bispinor_from_f(uf, c)) < 1e-12);
        CHECK(rel_diff(field_apply(g, bw_construct(f, c)), bw_construct(uf, c)) < 1e-12);
        CHECK(rel_diff(field_apply(g, pf_construct(f, 1, c)), pf_construct(uf, 1, c)) < 1e-12);
        if (twice == 3) CHECK(rel_diff(field_apply(g, rarita_schwinger(f, c)), rarita_schwinger(uf, c)) < 1e-12);
      }
    }
  }
}

TEST_CASE("covariance under boosts converges with the grid") {
  // boosts move nodes off the grid; the pulled-back field is interpolated
  Rng rng(25);
  const SpinLabel s(1);
  const SL2C a = exp_traceless(0.15 * Mat2(sigma(1) + 0.5 * sigma(3)));
  const PoincareElement g{random_four_vector(rng, 0.5), a};
  Rng amp_rng(26);
  const Amplitude f = support::random_bumps(amp_rng, s);
  double prev = 1.0;
  for (const auto& [radial, rule] : {std::pair{24, "product:12x16"}, {32, "product:24x32"}, {48, "product:36x48"}}) {
    const auto gr = make_grid({1.0, 6.0, radial, rule});
    const Field lhs = field_apply(g, phi_from_f(sample(gr, s, f)));
    const Field rhs = phi_from_f(rep_apply(g, gr, s, f));
    const double d = rel_diff(lhs, rhs);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("position space") {
  const WaveFunction f = random_wave(grid(), SpinLabel(1), 27);
  const Field phi = phi_from_f(f);
  SUBCASE("value at the origin is the plain quadrature sum") {
    VecX sum = VecX::Zero(2);
    for (std::size_t k = 0; k < phi.size(); ++k) sum += grid()->weight(k) * phi.at(k);
    const MatX at0 = x_space_transform(phi, {FourVector()});
    CHECK(max_abs(MatX(at0.row(0).transpose() - sum * std::pow(2.0 * M_PI, -1.5))) < 1e-14 * sum.norm());
  }
  SUBCASE("Klein-Gordon residual is second-difference error only") {
    Rng rng(28);
    for (int t = 0; t < 3; ++t) {
      const FourVector x = random_four_vector(rng, 1.0);
      const double coarse = klein_gordon_residual(phi, x, 0.04);
      const double fine = klein_gordon_residual(phi, x, 0.02);
      CAPTURE(coarse);
      CAPTURE(fine);
      CHECK(fine < 1e-3);
      CHECK(fine < coarse / 8.0);  // fourth-order differences: ratio 16
    }
  }
  SUBCASE("narrow momentum support gives a plane wave at rest") {
    const auto narrow = make_grid({2.0, 0.02, 6, "lebedev26"});
    const WaveFunction g = sample(narrow, SpinLabel(1), [](const FourVector&) { return VecX::Ones(2); });
    const Field psi = phi_from_f(g);
    const MatX v = x_space_transform(psi, {FourVector(), FourVector(1.0, 0, 0, 0), FourVector(0.0, 1.0, 0.5, 0)});
    const Complex ratio_t = v(1, 0) / v(0, 0);
    const Complex ratio_x = v(2, 0) / v(0, 0);
    CHECK(std::abs(ratio_t - std::exp(Complex(0.0, -2.0))) < 1e-3);
    CHECK(std::abs(ratio_x - 1.0) < 1e-3);
  }
}

TEST_CASE("layout names") {
  for (FieldLayout l : {FieldLayout::phi, FieldLayout::chi, FieldLayout::bispinor, FieldLayout::bw, FieldLayout::pf,
                        FieldLayout::rs})
    CHECK(parse_layout(layout_name(l)) == l);
  CHECK_THROWS_AS(parse_layout("vector"), DomainError);
}
