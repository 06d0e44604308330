#include "poincare/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>

#include <gsl/gsl_sf_bessel.h>

namespace poincare {

namespace {

struct Measured {
  double value = 0.0;
  std::string note;
};

// state shared by the invariants of one run
struct Context {
  std::optional<StatisticsReport> verdict;
};

struct Invariant {
  std::string name;
  const char* kind;
  double bound;
  std::function<Measured(const VerifyConfig&, Rng&, Context&)> run;
};

Rng stream(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

Mat2 symplectic(const VerifyConfig& c) {
  if (!c.corrupt_epsilon) return epsilon();
  Mat2 bad = Mat2::Zero();
  bad(0, 1) = 1.0;
  bad(1, 0) = 1.0;
  return bad;
}

MatX kron_power(const MatX& a, int n) {
  MatX out = MatX::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    MatX next(out.rows() * a.rows(), out.cols() * a.cols());
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c)
        next.block(r * a.rows(), c * a.cols(), a.rows(), a.cols()) = out(r, c) * a;
    out = std::move(next);
  }
  return out;
}

Amplitude bumps(Rng& rng, SpinLabel s) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<std::tuple<int, Complex, Vec3>> terms;
  for (int l = 0; l < s.dim(); ++l)
    for (int t = 0; t < 2; ++t) terms.emplace_back(l, Complex(u(rng), u(rng)), Vec3(u(rng), u(rng), u(rng)));
  return [terms, s](const FourVector& p) {
    VecX v = VecX::Zero(s.dim());
    for (const auto& [l, c, k] : terms) v[l] += c * std::exp(-(spatial(p) - k).squaredNorm());
    return v;
  };
}

PoincareElement random_grid_motion(Rng& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  const auto& oct = binary_octahedral();
  std::uniform_int_distribution<std::size_t> pick(0, oct.size() - 1);
  return {{u(rng), u(rng), u(rng), u(rng)}, oct[pick(rng)]};
}

GridPtr verify_grid(const VerifyConfig& c) {
  GridSpec spec = c.grid;
  spec.mass = c.mass;
  return make_grid(spec);
}

// small grid for Fock checks: nodes on the octahedral axes exist for every Lebedev rule
GridPtr fock_grid(const VerifyConfig& c) { return make_grid({c.mass, 4.0 * c.mass, 6, "lebedev26"}); }

std::size_t axis_node(const MomentumGrid& g, const Vec3& dir) {
  const Vec3 p = g.radii()[2] * dir;
  const auto k = g.find(on_shell(g.mass(), p.x(), p.y(), p.z()));
  if (!k) throw DomainError("verify: grid has no node on the requested axis");
  return *k;
}

SL2C quarter_turn_z() {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::polar(1.0, -M_PI / 4);
  m(1, 1) = std::polar(1.0, M_PI / 4);
  return SL2C::from(m);
}

std::vector<FourVector> fock_points() { return {{0.0, 0.0, 0.0, 0.0}, {0.3, -0.7, 0.2, 1.1}, {-1.2, 0.4, 0.9, -0.3}}; }

double wave_diff(const WaveFunction& a, const WaveFunction& b) { return max_abs(MatX(a.amp - b.amp)); }

const StatisticsReport& verdict_for(const VerifyConfig& c, Context& ctx) {
  if (!ctx.verdict) {
    VerdictConfig v;
    v.mass = c.mass;
    v.kernel = c.kernel;
    ctx.verdict = spin_statistics_verdict(v);
  }
  return *ctx.verdict;
}

std::vector<Invariant> registry() {
  std::vector<Invariant> r;

  // covering map and the hermitian encoding
  r.push_back({"minkowski.covering_homomorphism", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int i = 0; i < c.samples; ++i) {
                   const SL2C x = random_sl2c(rng);
                   const SL2C y = random_sl2c(rng);
                   worst = std::max(worst, max_abs(covering_map(x * y).m - covering_map(x).m * covering_map(y).m));
                 }
                 return Measured{worst, ""};
               }});
  r.push_back({"minkowski.covering_kernel", "max", 1e-15, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int i = 0; i < c.samples; ++i) {
                   const SL2C x = random_sl2c(rng);
                   worst = std::max(worst, max_abs(covering_map(x).m - covering_map(-x).m));
                 }
                 return Measured{worst, ""};
               }});
  r.push_back({"minkowski.lorentz_metric", "max", 1e-11, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int i = 0; i < c.samples; ++i) worst = std::max(worst, covering_map(random_sl2c(rng)).metric_defect());
                 return Measured{worst, ""};
               }});
  r.push_back({"minkowski.interval_determinant", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int i = 0; i < c.samples; ++i) {
                   const FourVector x = random_four_vector(rng, 2.0);
                   worst = std::max(worst, std::abs(to_hermitian(x).determinant() - minkowski_dot(x, x)));
                 }
                 return Measured{worst, ""};
               }});
  r.push_back({"minkowski.hat_inverse_adjoint", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 const Mat2 eps = symplectic(c);
                 double worst = 0.0;
                 for (int i = 0; i < c.samples; ++i) {
                   const SL2C a = random_sl2c(rng);
                   worst = std::max(worst, max_abs(Mat2(hat_with(eps, a) - a.matrix().adjoint().inverse())));
                 }
                 return Measured{worst, c.corrupt_epsilon ? "symplectic matrix corrupted (negative control)" : ""};
               }});

  // spin representations
  r.push_back({"irreps.homomorphism", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 1; n <= std::max(4, c.max_twice_spin); ++n) {
                   const SpinLabel s(n);
                   for (int i = 0; i < c.samples / 4; ++i) {
                     const SL2C a = random_sl2c(rng);
                     const SL2C b = random_sl2c(rng);
                     const MatX da = spin_rep(s, a);
                     const MatX db = spin_rep(s, b);
                     worst = std::max(worst, max_abs(MatX(spin_rep(s, a * b) - da * db)) / (max_abs(da) * max_abs(db)));
                   }
                 }
                 return Measured{worst, "relative to max|D(A)| max|D(B)|"};
               }});
  r.push_back({"irreps.symmetric_power", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 1; n <= 4; ++n) {
                   const SpinLabel s(n);
                   const MatX e = symmetric_embedding(s);
                   for (int i = 0; i < c.samples / 4; ++i) {
                     const SL2C a = random_sl2c(rng);
                     const MatX oracle = e.adjoint() * kron_power(a.matrix(), n) * e;
                     worst = std::max(worst, max_abs(MatX(spin_rep(s, a) - oracle)));
                   }
                 }
                 return Measured{worst, "2s = 1..4"};
               }});
  r.push_back({"irreps.su2_unitarity", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 1; n <= std::max(4, c.max_twice_spin); ++n)
                   for (int i = 0; i < c.samples / 4; ++i) {
                     const MatX d = spin_rep(SpinLabel(n), random_su2(rng));
                     worst = std::max(worst, max_abs(MatX(d.adjoint() * d - MatX::Identity(n + 1, n + 1))));
                   }
                 return Measured{worst, ""};
               }});

  // boosts and Wigner rotations
  r.push_back({"orbits.boost_defining_property", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 const Mat2 pi = to_hermitian({c.mass, 0, 0, 0});
                 for (BoostChoice ch : {BoostChoice::canonical, BoostChoice::helicity})
                   for (int i = 0; i < c.samples; ++i) {
                     const FourVector p = random_on_shell(rng, c.mass);
                     const SL2C l = boost(ch, c.mass, p);
                     worst = std::max(worst, max_abs(Mat2(l.matrix() * pi * l.matrix().adjoint() - to_hermitian(p))) / p[0]);
                   }
                 return Measured{worst, "relative to p^0, both sections"};
               }});
  r.push_back({"orbits.wigner_rotation_su2", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (BoostChoice ch : {BoostChoice::canonical, BoostChoice::helicity})
                   for (int i = 0; i < c.samples; ++i) {
                     const SL2C w = wigner_rotation(ch, c.mass, random_on_shell(rng, c.mass), random_sl2c(rng));
                     worst = std::max({worst, max_abs(Mat2(w.matrix().adjoint() * w.matrix() - Mat2::Identity())),
                                       std::abs(w.matrix().determinant() - 1.0)});
                   }
                 return Measured{worst, ""};
               }});
  r.push_back({"orbits.cocycle", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (BoostChoice ch : {BoostChoice::canonical, BoostChoice::helicity})
                   for (int i = 0; i < c.samples; ++i) {
                     const FourVector p = random_on_shell(rng, c.mass);
                     const SL2C a = random_sl2c(rng);
                     const SL2C b = random_sl2c(rng);
                     const SL2C lhs = wigner_rotation(ch, c.mass, p, a * b);
                     const SL2C rhs = wigner_rotation(ch, c.mass, act(b, p), a) * wigner_rotation(ch, c.mass, p, b);
                     worst = std::max(worst, max_abs(Mat2(lhs.matrix() - rhs.matrix())));
                   }
                 return Measured{worst, ""};
               }});
  r.push_back({"orbits.helicity_axis", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 1; n <= 4; ++n) {
                   const SpinLabel s(n);
                   const auto j = angular_momentum(s);
                   for (int i = 0; i < c.samples / 4; ++i) {
                     const FourVector p = random_on_shell(rng, c.mass);
                     const Vec3 nh = spatial(p).normalized();
                     const MatX d = spin_rep(s, helicity_boost(c.mass, p).rotation);
                     worst = std::max(worst, max_abs(MatX(d * j[2] * d.adjoint() - (nh[0] * j[0] + nh[1] * j[1] + nh[2] * j[2]))));
                   }
                 }
                 return Measured{worst, "D(R) J_3 D(R)^-1 = J.n"};
               }});

  // the induced representation on a grid
  r.push_back({"wigner_rep.representation_property", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 const GridPtr grid = verify_grid(c);
                 double worst = 0.0;
                 for (int n = 0; n <= c.max_twice_spin; ++n) {
                   const SpinLabel s(n);
                   const WaveFunction f = sample(grid, s, bumps(rng, s));
                   for (BoostChoice ch : {BoostChoice::canonical, BoostChoice::helicity})
                     for (int t = 0; t < 3; ++t) {
                       const PoincareElement g1 = random_grid_motion(rng);
                       const PoincareElement g2 = random_grid_motion(rng);
                       worst = std::max(worst, wave_diff(rep_apply(g1, rep_apply(g2, f, ch), ch), rep_apply(g1 * g2, f, ch)));
                     }
                 }
                 return Measured{worst, "translations x binary octahedral"};
               }});
  r.push_back({"wigner_rep.unitarity", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 const GridPtr grid = verify_grid(c);
                 double worst = 0.0;
                 for (int n = 0; n <= c.max_twice_spin; ++n) {
                   const SpinLabel s(n);
                   const WaveFunction f = sample(grid, s, bumps(rng, s));
                   const WaveFunction h = sample(grid, s, bumps(rng, s));
                   for (BoostChoice ch : {BoostChoice::canonical, BoostChoice::helicity})
                     for (int t = 0; t < 3; ++t) {
                       const PoincareElement g = random_grid_motion(rng);
                       worst = std::max(worst, std::abs(inner_product(rep_apply(g, f, ch), rep_apply(g, h, ch)) -
                                                        inner_product(f, h)));
                     }
                 }
                 return Measured{worst, ""};
               }});
  r.push_back({"wigner_rep.section_intertwiner", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 const GridPtr grid = verify_grid(c);
                 double worst = 0.0;
                 for (int n = 1; n <= c.max_twice_spin; ++n) {
                   const SpinLabel s(n);
                   const WaveFunction f = sample(grid, s, bumps(rng, s));
                   const WaveFunction tf = section_intertwiner(f);
                   for (int t = 0; t < 3; ++t) {
                     const PoincareElement g = random_grid_motion(rng);
                     worst = std::max(worst, wave_diff(rep_apply(g, tf, BoostChoice::canonical),
                                                       section_intertwiner(rep_apply(g, f, BoostChoice::helicity))));
                   }
                 }
                 return Measured{worst, ""};
               }});
  r.push_back({"wigner_rep.massless_phase", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 std::uniform_real_distribution<double> u(-1, 1);
                 const FourVector pi(0.5, 0, 0, 0.5);
                 double worst = 0.0;
                 for (int twice_l = -3; twice_l <= 3; ++twice_l)
                   for (int i = 0; i < c.samples / 10; ++i) {
                     const MasslessLittle x{Complex(u(rng), u(rng)), wrap_angle(6 * u(rng), 4 * M_PI)};
                     const SL2C w = wigner_rotation(BoostChoice::canonical, 0.0, pi, SL2C::from(x.matrix()));
                     const double phi = massless_little_group_decompose(w).phi;
                     worst = std::max(worst, std::abs(std::exp(Complex(0, 0.5 * twice_l * phi)) -
                                                      std::exp(Complex(0, 0.5 * twice_l * x.phi))));
                   }
                 return Measured{worst, "stabilizer acts by e^{i lambda phi}"};
               }});

  // Mackey machine, one entry per built-in group
  for (const char* g : {"S3", "D4", "A4", "Z5:Z4", "Heis3"}) {
    r.push_back({std::string("mackey.") + g, "max", 1e-12, [g](const VerifyConfig& c, Rng&, Context&) {
                   const MackeyReport rep = verify_mackey(builtin_group(g), c.seed);
                   double worst = 0.0;
                   for (const InducedClass& k : rep.classes)
                     worst = std::max({worst, k.homomorphism_defect, k.unitarity_defect, k.imprimitivity.resolution_defect,
                                       k.imprimitivity.orthogonality_defect, k.imprimitivity.covariance_defect});
                   if (!(rep.irreducible && rep.inequivalent && rep.complete && rep.failures.empty()))
                     return Measured{1.0, "exact assertion failed"};
                   return Measured{worst, "sum dim^2 = " + std::to_string(rep.sum_dim_squared) + " = |G|; exact checks passed"};
                 }});
  }

  // classical fields
  r.push_back({"fields.dirac_equation", "max", 1e-12, [](const VerifyConfig& c, Rng& rng, Context&) {
                 const WaveFunction f = sample(verify_grid(c), SpinLabel(1), bumps(rng, SpinLabel(1)));
                 return Measured{generalized_dirac_residual(bispinor_from_f(f)), "s = 1/2"};
               }});
  r.push_back({"fields.generalized_dirac", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 2; n <= c.max_twice_spin; ++n) {
                   const WaveFunction f = sample(verify_grid(c), SpinLabel(n), bumps(rng, SpinLabel(n)));
                   worst = std::max(worst, generalized_dirac_residual(bispinor_from_f(f)));
                 }
                 return Measured{worst, ""};
               }});
  r.push_back({"fields.duality", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 0; n <= c.max_twice_spin; ++n) {
                   const WaveFunction f = sample(verify_grid(c), SpinLabel(n), bumps(rng, SpinLabel(n)));
                   const DualityResidual d = duality_check(phi_from_f(f), chi_from_f(f));
                   worst = std::max({worst, d.chi_from_phi, d.phi_from_chi});
                 }
                 return Measured{worst, ""};
               }});
  r.push_back({"fields.bargmann_wigner", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 1; n <= std::min(3, c.max_twice_spin); ++n) {
                   const WaveFunction f = sample(verify_grid(c), SpinLabel(n), bumps(rng, SpinLabel(n)));
                   const Field psi = bw_construct(f);
                   for (double v : bw_residual(psi)) worst = std::max(worst, v);
                   worst = std::max(worst, bw_symmetry_defect(psi));
                 }
                 return Measured{worst, "2s <= 3"};
               }});
  r.push_back({"fields.pauli_fierz", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 1; n <= std::min(3, c.max_twice_spin); ++n) {
                   const WaveFunction f = sample(verify_grid(c), SpinLabel(n), bumps(rng, SpinLabel(n)));
                   for (int dotted = 0; dotted <= n; ++dotted) {
                     const PFResidual p = pf_residual(pf_construct(f, dotted), f);
                     if (dotted < n) worst = std::max(worst, p.undotted_to_dotted);
                     if (dotted > 0) worst = std::max(worst, p.dotted_to_undotted);
                   }
                 }
                 return Measured{worst, "all splits, 2s <= 3"};
               }});
  r.push_back({"fields.rarita_schwinger", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 const WaveFunction f = sample(verify_grid(c), SpinLabel(3), bumps(rng, SpinLabel(3)));
                 const RSResidual res = rs_residual(rarita_schwinger(f));
                 return Measured{std::max(res.dirac, res.subsidiary), "Dirac and gamma-trace constraints"};
               }});
  r.push_back({"fields.norm_equalities", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 double worst = 0.0;
                 for (int n = 0; n <= c.max_twice_spin; ++n) {
                   const WaveFunction f = sample(verify_grid(c), SpinLabel(n), bumps(rng, SpinLabel(n)));
                   const double norm = inner_product(f, f).real();
                   std::vector<Field> fields{phi_from_f(f), chi_from_f(f), bispinor_from_f(f), bw_construct(f)};
                   if (n == 3) fields.push_back(rarita_schwinger(f));
                   for (const Field& fl : fields) worst = std::max(worst, std::abs(field_norm(fl) - norm) / norm);
                 }
                 return Measured{worst, "relative to the Wigner norm"};
               }});

  // spin-statistics kernels
  r.push_back({"spinstat.sign_dichotomy", "min", 1e3, [](const VerifyConfig& c, Rng&, Context& ctx) {
                 double worst = std::numeric_limits<double>::infinity();
                 for (const PointReport& p : verdict_for(c, ctx).points)
                   if (!p.skipped) worst = std::min(worst, p.ratio);
                 return Measured{worst, "min |wrong| / |right| over 2s in {0,1,2}, m d in {1,2,4}"};
               }});
  r.push_back({"spinstat.monotone_refinement", "max", 0.0, [](const VerifyConfig& c, Rng&, Context& ctx) {
                 double bad = 0.0;
                 for (const PointReport& p : verdict_for(c, ctx).points)
                   if (!p.skipped && !p.monotone) bad += 1.0;
                 return Measured{bad, "count of non-monotone right-statistics sequences"};
               }});
  r.push_back({"spinstat.delta1_bessel", "max", 1e-2, [](const VerifyConfig& c, Rng&, Context&) {
                 double worst = 0.0;
                 for (const FourVector& xi : default_test_points(c.mass)) {
                   const double rho = std::sqrt(-minkowski_dot(xi, xi));
                   const double exact = c.mass * gsl_sf_bessel_K1(c.mass * rho) / (2.0 * M_PI * M_PI * rho);
                   const KernelSequence k = bracket_kernel(SpinLabel(0), c.mass, xi, Bracket::anticommutator, c.kernel);
                   worst = std::max(worst, std::abs(k.extrapolated(0, 0) - exact) / exact);
                 }
                 return Measured{worst, "relative, against m K1(m rho) / (2 pi^2 rho)"};
               }});
  r.push_back({"spinstat.delta_timelike", "max", 5e-3, [](const VerifyConfig& c, Rng&, Context&) {
                 const double t = 2.0 / c.mass;
                 const double exact = c.mass * gsl_sf_bessel_J1(c.mass * t) / (4.0 * M_PI * t);
                 const JordanPauli d = jordan_pauli_delta(c.mass, {t, 0, 0, 0}, c.kernel);
                 return Measured{std::abs(d.value - exact) / std::abs(exact), "relative, against m J1(m t) / (4 pi t)"};
               }});
  r.push_back({"spinstat.delta_antisymmetry", "max", 1e-12, [](const VerifyConfig& c, Rng&, Context&) {
                 double worst = 0.0;
                 for (const FourVector& xi : {FourVector(2.0, 0, 0, 0), FourVector(1.3, 0.2, -0.5, 0.6), FourVector(0.4, 1.0, 1.0, -0.5)}) {
                   const FourVector x = (1.0 / c.mass) * xi;
                   const JordanPauli a = jordan_pauli_delta(c.mass, x, c.kernel);
                   const JordanPauli b = jordan_pauli_delta(c.mass, -x, c.kernel);
                   for (std::size_t i = 0; i < a.sequence.size(); ++i)
                     worst = std::max(worst, std::abs(a.sequence[i] + b.sequence[i]));
                 }
                 return Measured{worst, "per damping value"};
               }});

  // truncated Fock space
  r.push_back({"fock.car", "max", 0.0, [](const VerifyConfig& c, Rng&, Context&) {
                 const GridPtr g = fock_grid(c);
                 const auto fock = fock_build(ModeSet::multiplets(g, SpinLabel(1), Statistics::fermi, {0, 5, 9}));
                 const AlgebraDefect d = algebra_check(fock);
                 return Measured{std::max(d.mixed, d.diagonal), "6 modes, 64 states"};
               }});
  r.push_back({"fock.ccr_below_cutoff", "max", 1e-15, [](const VerifyConfig& c, Rng&, Context&) {
                 const GridPtr g = fock_grid(c);
                 const auto fock = fock_build(ModeSet::multiplets(g, SpinLabel(0), Statistics::bose, {0, 5, 9}, 3));
                 const AlgebraDefect d = algebra_check(fock);
                 return Measured{std::max(d.mixed, d.diagonal), "3 modes, N_max = 3; rounding of sqrt(n) sqrt(n)"};
               }});
  r.push_back({"fock.covariance_translation", "max", 1e-10, [](const VerifyConfig& c, Rng&, Context&) {
                 const GridPtr g = fock_grid(c);
                 const auto fock = fock_build(ModeSet::multiplets(g, SpinLabel(1), Statistics::fermi, {axis_node(*g, Vec3::UnitZ())}));
                 double worst = 0.0;
                 for (const FourVector& a : {FourVector(0.5, 0, 0, 0), FourVector(0.3, 0.1, -0.5, 0.2)})
                   worst = std::max(worst, covariance_check(fock, {a, SL2C()}, fock_points()));
                 return Measured{worst, "2-mode Fermi space"};
               }});
  r.push_back({"fock.covariance_rotation", "max", 1e-10, [](const VerifyConfig& c, Rng&, Context&) {
                 const GridPtr g = fock_grid(c);
                 const auto fock = fock_build(ModeSet::multiplets(g, SpinLabel(1), Statistics::fermi, {axis_node(*g, Vec3::UnitZ())}));
                 return Measured{covariance_check(fock, {FourVector(), quarter_turn_z()}, fock_points()),
                                 "2-mode Fermi space, quarter turn about z"};
               }});
  r.push_back({"fock.smeared_bracket", "max", 1e-10, [](const VerifyConfig& c, Rng& rng, Context&) {
                 std::uniform_real_distribution<double> u(-1.0, 1.0);
                 const GridPtr g = fock_grid(c);
                 double worst = 0.0;
                 for (int twice : {0, 1}) {
                   const SpinLabel s(twice);
                   const Statistics st = twice == 0 ? Statistics::bose : Statistics::fermi;
                   const std::vector<std::size_t> nodes{axis_node(*g, Vec3::UnitZ()), 9};
                   const auto fock = fock_build(ModeSet::multiplets(g, s, st, nodes, 2));
                   Smearing f{{{0.0, 0.1, 0.0, 0.2}, {0.2, -0.3, 0.5, 0.0}}, MatX(2, s.dim())};
                   Smearing h{{{0.1, 0.0, 0.4, -0.2}}, MatX(1, s.dim())};
                   for (MatX* m : {&f.coeff, &h.coeff})
                     for (Eigen::Index i = 0; i < m->size(); ++i) m->data()[i] = Complex(u(rng), u(rng));
                   const SmearedBracket b = smeared_bracket(fock, f, h);
                   Complex expected = 0.0;
                   for (std::size_t j = 0; j < f.points.size(); ++j)
                     for (std::size_t l = 0; l < h.points.size(); ++l) {
                       const MatX k = bracket_kernel_grid(s, *g, f.points[j] - h.points[l], statistics_bracket(st), nodes);
                       for (int a = 0; a < s.dim(); ++a)
                         for (int bb = 0; bb < s.dim(); ++bb)
                           expected += f.coeff(static_cast<Eigen::Index>(j), a) *
                                       std::conj(h.coeff(static_cast<Eigen::Index>(l), bb)) * k(a, bb);
                     }
                   const double scale = std::abs(expected);
                   worst = std::max({worst, std::abs(b.scalar - expected) / scale, b.defect / scale});
                 }
                 return Measured{worst, "relative; scalar part and non-scalar remainder"};
               }});
  return r;
}

const std::vector<Invariant>& invariants() {
  static const std::vector<Invariant> r = registry();
  return r;
}

void validate(const VerifyConfig& c) {
  if (!(c.mass > 0.0)) throw DomainError("verify: mass must be positive");
  if (c.samples < 4) throw DomainError("verify: at least 4 samples per invariant");
  if (c.max_twice_spin < 3) throw DomainError("verify: the field suite needs max 2s >= 3");
  if (!(c.grid.p_max > 0.0) || c.grid.radial < 1) throw DomainError("verify: grid p_max and radial count must be positive");
  if (c.kernel.eps.size() < 2) throw DomainError("verify: at least two damping values");
  for (double e : c.kernel.eps)
    if (!(e > 0.0)) throw DomainError("verify: damping values must be positive");
  for (const auto& [name, value] : c.tolerance) {
    const auto& inv = invariants();
    if (std::none_of(inv.begin(), inv.end(), [&](const Invariant& i) { return name == i.name; }))
      throw DomainError("verify: unknown invariant '" + name + "' in tolerance override");
    if (!(value >= 0.0)) throw DomainError("verify: tolerance for '" + name + "' must be non-negative");
  }
  (void)make_angular_rule(c.grid.angular);
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const InvariantResult& r) { return r.passed; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : invariants)
    if (!r.passed) out.push_back(r.name);
  return out;
}

std::vector<std::string> verify_invariant_names() {
  std::vector<std::string> out;
  for (const auto& i : invariants()) out.emplace_back(i.name);
  return out;
}

VerifyReport run_verify(const VerifyConfig& config) {
  validate(config);
  VerifyReport report;
  Context ctx;
  const auto& inv = invariants();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    InvariantResult r;
    r.name = inv[i].name;
    r.module = r.name.substr(0, r.name.find('.'));
    r.kind = inv[i].kind;
    const auto over = config.tolerance.find(r.name);
    r.bound = over == config.tolerance.end() ? inv[i].bound : over->second;
    Rng rng = stream(config.seed, i);
    try {
      const Measured m = inv[i].run(config, rng, ctx);
      r.value = m.value;
      r.note = m.note;
      r.passed = r.kind == "max" ? r.value <= r.bound : r.value >= r.bound;
    } catch (const std::exception& e) {
      r.value = std::numeric_limits<double>::quiet_NaN();
      r.note = std::string("error: ") + e.what();
      r.passed = false;
    }
    report.invariants.push_back(std::move(r));
  }
  return report;
}

Json verify_json(const VerifyConfig& config, const VerifyReport& report) {
  Json inv = Json::array();
  for (const auto& r : report.invariants) {
    Json j{{"module", r.module}, {"name", r.name}, {"kind", r.kind}, {"tolerance", r.bound}};
    // NaN is not representable in JSON
    j["residual"] = std::isfinite(r.value) ? Json(r.value) : Json(nullptr);
    j["passed"] = r.passed;
    if (!r.note.empty()) j["note"] = r.note;
    inv.push_back(std::move(j));
  }
  Json eps = Json::array();
  for (double e : config.kernel.eps) eps.push_back(e);
  return Json{{"schema", kSchemaVersion},
              {"command", "verify"},
              {"config",
               {{"seed", config.seed},
                {"samples", config.samples},
                {"max_twice_spin", config.max_twice_spin},
                {"mass", config.mass},
                {"grid", grid_spec_json(config.grid)},
                {"eps", eps},
                {"damping", config.kernel.damping == Damping::energy ? "energy" : "gaussian"},
                {"corrupt_epsilon", config.corrupt_epsilon}}},
              {"invariants", std::move(inv)},
              {"failures", report.failures()},
              {"passed", report.passed()}};
}

}  // namespace poincare
