#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poincare/wigner_rep.hpp"
#include "test_support.hpp"

using namespace poincare;
using support::random_bumps;

namespace {

double max_diff(const WaveFunction& a, const WaveFunction& b) { return max_abs(MatX(a.amp - b.amp)); }

}  // namespace

TEST_CASE("grid") {
  const auto g = make_grid({1.0, 6.0, 16, "lebedev26"});
  CHECK(g->size() == 16 * 26);
  double wsum = 0.0;
  for (std::size_t k = 0; k < g->size(); ++k) {
    const FourVector& p = g->node(k);
    CHECK(std::abs(minkowski_dot(p, p) - 1.0) < 1e-9 * p[0] * p[0]);
    CHECK(g->weight(k) > 0.0);
    REQUIRE(g->mirror(k).has_value());
    CHECK(g->find(p) == k);
    wsum += g->weight(k) * std::exp(-spatial(p).squaredNorm());
  }
  // int d^3p e^{-p^2}/(2p0) over R^3 for m = 1, computed by hand in spherical coordinates
  // is 2 pi int_0^inf p^2 e^{-p^2}/sqrt(p^2+1) dp = 1.0046276... (checked by refinement below)
  double prev = 0.0;
  for (int n : {8, 16, 32, 48}) {
    const MomentumGrid h({1.0, 6.0, n, "lebedev26"});
    double s = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) s += h.weight(k) * std::exp(-spatial(h.node(k)).squaredNorm());
    if (n == 48) CHECK(std::abs(s - prev) / s < 1e-4);
    prev = s;
  }
  CHECK(std::abs(prev - wsum) / prev < 1e-6);
  CHECK_THROWS_AS(MomentumGrid({1.0, 6.0, 4, "product:4x5"}), DomainError);
  CHECK_THROWS_AS(MomentumGrid({1.0, 6.0, 4, "nonsense"}), DomainError);

  for (const char* rule : {"lebedev26", "lebedev50", "product:6x8"}) {
    const AngularRule a = make_angular_rule(rule);
    double sum = 0.0;
    for (double w : a.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(make_angular_rule("lebedev50").size() == 50);
}

TEST_CASE("octahedral group preserves Lebedev grids") {
  CHECK(binary_octahedral().size() == 48);
  for (const char* rule : {"lebedev26", "lebedev50"}) {
    const MomentumGrid g({1.0, 5.0, 4, rule});
    for (const SL2C& r : binary_octahedral()) {
      for (std::size_t k = 0; k < g.size(); ++k) CHECK(g.find(act(r, g.node(k))).has_value());
    }
  }
}

TEST_CASE("inner product") {
  Rng rng(1);
  const SpinLabel s(2);
  const auto grid = make_grid({1.0, 6.0, 16, "lebedev26"});
  const WaveFunction f = sample(grid, s, random_bumps(rng, s));
  const WaveFunction g = sample(grid, s, random_bumps(rng, s));
  CHECK(inner_product(WaveFunction(grid, s), WaveFunction(grid, s)) == Complex(0.0));
  CHECK(inner_product(f, g) == std::conj(inner_product(g, f)));
  CHECK(inner_product(f, f).real() > 0.0);

  const WaveFunction other(make_grid({1.0, 6.0, 8, "lebedev26"}), s);
  CHECK_THROWS_AS(inner_product(f, other), DomainError);

  const Amplitude gauss = [](const FourVector& p) {
    VecX v(1);
    v[0] = std::exp(-0.5 * spatial(p).squaredNorm());
    return v;
  };
  double prev = 0.0;
  double change = 1.0;
  for (int n : {12, 24, 48}) {
    const WaveFunction h = sample(make_grid({1.0, 8.0, n, "lebedev26"}), SpinLabel(0), gauss);
    const double v = inner_product(h, h).real();
    change = std::abs(v - prev) / v;
    prev = v;
  }
  CHECK(change < 1e-4);
}

TEST_CASE("representation on translations x octahedral rotations") {
  Rng rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  const auto& oct = binary_octahedral();
  std::uniform_int_distribution<std::size_t> pick(0, oct.size() - 1);
  for (int n : {0, 1, 2, 3}) {
    const SpinLabel s(n);
    const auto grid = make_grid({1.0, 6.0, 8, "lebedev26"});
    const WaveFunction f = sample(grid, s, random_bumps(rng, s));
    const WaveFunction g = sample(grid, s, random_bumps(rng, s));

    const PoincareElement id{};
    CHECK(max_diff(rep_apply(id, f), f) < 1e-14);

    const FourVector a(u(rng), u(rng), u(rng), u(rng));
    const WaveFunction t = rep_apply({a, SL2C()}, f);
    for (std::size_t k = 0; k < grid->size(); ++k) {
      const VecX expect = std::exp(Complex(0, minkowski_dot(grid->node(k), a))) * f.at(k);
      CHECK(max_abs(VecX(t.at(k) - expect)) < 1e-14);
    }

    for (BoostChoice c : {BoostChoice::canonical, BoostChoice::helicity}) {
      for (int trial = 0; trial < 10; ++trial) {
        const PoincareElement g1{{u(rng), u(rng), u(rng), u(rng)}, oct[pick(rng)]};
        const PoincareElement g2{{u(rng), u(rng), u(rng), u(rng)}, oct[pick(rng)]};
        const WaveFunction lhs = rep_apply(g1, rep_apply(g2, f, c), c);
        const WaveFunction rhs = rep_apply(g1 * g2, f, c);
        CHECK(max_diff(lhs, rhs) < 1e-12);
        const Complex before = inner_product(f, g);
        const Complex after = inner_product(rep_apply(g1, f, c), rep_apply(g1, g, c));
        CHECK(std::abs(after - before) < 1e-12);
      }
    }
  }
}

TEST_CASE("boosts through interpolation converge") {
  // exact pullback isolates the quadrature error; interpolated pullback adds the stencil error
  Rng rng(3);
  const SpinLabel s(1);
  const Amplitude f = random_bumps(rng, s);
  Mat2 x = Mat2::Zero();
  x(0, 0) = 0.15;
  x(1, 1) = -0.15;
  x(0, 1) = 0.1;
  const PoincareElement boost{{0.2, 0, 0.1, 0}, exp_traceless(x)};
  double exact_err = 1.0;
  std::vector<double> interp_err;
  for (const auto& [n, rule] : std::vector<std::pair<int, std::string>>{{16, "product:12x16"}, {32, "product:24x32"}, {48, "product:36x48"}}) {
    const auto grid = make_grid({1.0, 7.0, n, rule});
    const WaveFunction fs = sample(grid, s, f);
    const double norm = inner_product(fs, fs).real();
    const WaveFunction ue = rep_apply(boost, grid, s, f);
    exact_err = std::abs(inner_product(ue, ue).real() - norm) / norm;
    const WaveFunction ui = rep_apply(boost, fs);
    interp_err.push_back(std::abs(inner_product(ui, ui).real() - norm) / norm);
  }
  CHECK(exact_err < 1e-8);
  CHECK(interp_err.back() < 1e-3);
  CHECK(interp_err.back() < interp_err.front());
}

TEST_CASE("covariant form") {
  Rng rng(4);
  const auto& oct = binary_octahedral();
  const auto grid = make_grid({1.3, 6.0, 6, "lebedev26"});
  for (int n : {0, 1, 2, 3}) {
    const SpinLabel s(n);
    const WaveFunction f = sample(grid, s, random_bumps(rng, s));
    const WaveFunction psi = covariant_form(f);
    if (n == 0) CHECK(max_diff(psi, f) == 0.0);
    double pointwise = 0.0;
    for (std::size_t k = 0; k < grid->size(); ++k) {
      const Complex lhs = covariant_pointwise_product(s, 1.3, grid->node(k), psi.at(k), psi.at(k));
      // scale: |psi|^2 times the size of the metric D(hat p/m)
      const double scale = psi.at(k).squaredNorm() * std::pow(grid->node(k)[0] / 1.3 * 2.0, n) + 1e-300;
      pointwise = std::max(pointwise, std::abs(lhs - f.at(k).squaredNorm()) / scale);
    }
    CHECK(pointwise < 1e-12);
    CHECK(max_diff(from_covariant_form(psi), f) < 1e-12);
    for (int t = 0; t < 5; ++t) {
      const PoincareElement g{{0.3 * t, 0.1, -0.2, 0.4}, oct[static_cast<std::size_t>(7 * t + 3) % oct.size()]};
      const WaveFunction via_psi = from_covariant_form(covariant_apply(g, psi));
      CHECK(max_diff(via_psi, rep_apply(g, f)) < 1e-10);
    }
  }
  const MomentumGrid rest({1.0, 1.0, 1, "lebedev26"});
  (void)rest;
  CHECK(max_abs(MatX(spin_rep(SpinLabel(2), boost(BoostChoice::canonical, 1.0, {1, 0, 0, 0})) -
                     MatX::Identity(3, 3))) < 1e-15);
}

TEST_CASE("boost-section equivalence") {
  Rng rng(5);
  const auto& oct = binary_octahedral();
  const auto grid = make_grid({1.0, 6.0, 6, "lebedev50"});
  for (int n : {1, 2, 3}) {
    const SpinLabel s(n);
    const WaveFunction f = sample(grid, s, random_bumps(rng, s));
    const WaveFunction tf = section_intertwiner(f);
    CHECK(std::abs(inner_product(tf, tf) - inner_product(f, f)) < 1e-12);
    for (int t = 0; t < 6; ++t) {
      const PoincareElement g{{0.1 * t, 0.3, 0.0, -0.2}, oct[static_cast<std::size_t>(11 * t + 5) % oct.size()]};
      const WaveFunction lhs = rep_apply(g, tf, BoostChoice::canonical);
      const WaveFunction rhs = section_intertwiner(rep_apply(g, f, BoostChoice::helicity));
      CHECK(max_diff(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("massless helicity representation") {
  const auto grid = make_grid({0.0, 4.0, 6, "product:6x8"});
  const FourVector pi(0.5, 0, 0, 0.5);
  Rng rng(6);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int twice_l : {-2, -1, 0, 1, 2, 3}) {
    for (int t = 0; t < 20; ++t) {
      const MasslessLittle x{Complex(u(rng), u(rng)), wrap_angle(6 * u(rng), 4 * M_PI)};
      const MasslessLittle y{Complex(u(rng), u(rng)), wrap_angle(6 * u(rng), 4 * M_PI)};
      // at p = pi the Wigner element of a stabilizer element is the element itself
      const SL2C wx = wigner_rotation(BoostChoice::canonical, 0.0, pi, SL2C::from(x.matrix()));
      const double phx = massless_little_group_decompose(wx).phi;
      CHECK(std::abs(std::exp(Complex(0, 0.5 * twice_l * phx)) - std::exp(Complex(0, 0.5 * twice_l * x.phi))) < 1e-12);
      const double pxy = massless_little_group_decompose(x.matrix() * y.matrix()).phi;
      const Complex sum = std::exp(Complex(0, 0.5 * twice_l * (x.phi + y.phi)));
      CHECK(std::abs(std::exp(Complex(0, 0.5 * twice_l * pxy)) - sum) < 1e-12);
    }
  }
  // rotations about z preserve the product grid; the helicity phase is then e^{i lambda phi}
  const double ang = 2 * M_PI / 8;
  Mat2 rz = Mat2::Zero();
  rz(0, 0) = std::exp(Complex(0, ang / 2));
  rz(1, 1) = std::exp(Complex(0, -ang / 2));
  WaveFunction f(grid, SpinLabel(0));
  for (std::size_t k = 0; k < grid->size(); ++k) f.amp(static_cast<Eigen::Index>(k), 0) = std::exp(-grid->node(k)[0]);
  const WaveFunction zero_helicity = massless_rep_apply(0, {{}, SL2C::from(rz)}, f);
  CHECK(max_diff(zero_helicity, f) < 1e-12);
  const WaveFunction h = massless_rep_apply(2, {{}, SL2C::from(rz)}, f);
  for (std::size_t k = 0; k < grid->size(); ++k) {
    const FourVector& p = grid->node(k);
    if (std::abs(p[1]) + std::abs(p[2]) < 1e-12 && p[3] > 0) {
      CHECK(std::abs(h.amp(static_cast<Eigen::Index>(k), 0) - std::exp(Complex(0, ang)) * f.amp(static_cast<Eigen::Index>(k), 0)) < 1e-12);
    }
  }
  // representation property on the z-rotation subgroup
  const WaveFunction twice = massless_rep_apply(3, {{}, SL2C::from(rz)}, massless_rep_apply(3, {{}, SL2C::from(rz)}, f));
  const WaveFunction once = massless_rep_apply(3, {{}, SL2C::from(Mat2(rz * rz))}, f);
  CHECK(max_diff(twice, once) < 1e-12);
}
