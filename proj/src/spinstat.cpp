#include "poincare/spinstat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "poincare/fields.hpp"

namespace poincare {

namespace {

using Monomial = std::array<int, 4>;

// All exponent vectors of total degree <= n, ordered by degree so that lower degrees form a prefix.
std::vector<Monomial> monomials(int n) {
  std::vector<Monomial> out;
  for (int d = 0; d <= n; ++d) {
    for (const auto& m : symmetric_multi_indices(d)) out.push_back(m);
  }
  return out;
}

double monomial_value(const Monomial& alpha, const FourVector& p) {
  double v = 1.0;
  for (int mu = 0; mu < 4; ++mu) v *= std::pow(p[mu], alpha[static_cast<std::size_t>(mu)]);
  return v;
}

// Inverse Vandermonde on the lattice {alpha : |alpha| <= n}, which is unisolvent for degree n.
const Eigen::MatrixXd& inverse_vandermonde(int n) {
  static std::mutex lock;
  static std::map<int, Eigen::MatrixXd> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const auto mono = monomials(n);
  const auto count = static_cast<Eigen::Index>(mono.size());
  Eigen::MatrixXd v(count, count);
  for (Eigen::Index r = 0; r < count; ++r) {
    const auto& a = mono[static_cast<std::size_t>(r)];
    const FourVector point(a[0], a[1], a[2], a[3]);
    for (Eigen::Index c = 0; c < count; ++c) v(r, c) = monomial_value(mono[static_cast<std::size_t>(c)], point);
  }
  return cache.emplace(n, v.fullPivLu().inverse()).first->second;
}

// Coefficient matrices of a polynomial in the contravariant monomials of degree <= n.
std::vector<MatX> polarize(const MatrixPolynomial& poly, int n) {
  const auto mono = monomials(n);
  const Eigen::MatrixXd& vinv = inverse_vandermonde(n);
  std::vector<MatX> values;
  values.reserve(mono.size());
  for (const auto& a : mono) values.push_back(poly(FourVector(a[0], a[1], a[2], a[3])));
  std::vector<MatX> coeff(mono.size(), MatX::Zero(values[0].rows(), values[0].cols()));
  for (std::size_t c = 0; c < mono.size(); ++c)
    for (std::size_t r = 0; r < mono.size(); ++r) {
      const double x = vinv(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
      if (x != 0.0) coeff[c] += x * values[r];
    }
  return coeff;
}

// Rotation taking the z axis to the unit vector n.
SL2C frame_rotation(const Vec3& n) {
  const Vec3 k = Vec3::UnitZ().cross(n);
  const double sin_theta = k.norm();
  const double theta = std::atan2(sin_theta, n.z());
  if (theta == 0.0) return SL2C();
  const Vec3 axis = sin_theta > 1e-300 ? Vec3(k / sin_theta) : Vec3::UnitX();
  const Complex i(0.0, 1.0);
  Mat2 m = std::cos(0.5 * theta) * Mat2::Identity();
  for (int a = 0; a < 3; ++a) m -= i * std::sin(0.5 * theta) * axis[a] * sigma(a + 1);
  return SL2C::from(m);
}

// Gauss-Legendre panels on [0, 1]; the integral over [-1, 1] pairs each node u with -u.
// GSL tabulates the 128-point rule to full precision, while its computed rules of other large
// orders are only good to ~1e-10, so the rule is composite with the phase per panel kept below 300.
struct HalfRule {
  std::vector<double> x;
  std::vector<double> w;
};

const HalfRule& theta_rule(double phase) {
  static std::mutex lock;
  static std::map<int, HalfRule> cache;
  const int panels = std::max(1, static_cast<int>(std::ceil(phase / 300.0)));
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(panels);
  if (it != cache.end()) return it->second;
  HalfRule rule;
  for (int i = 0; i < panels; ++i) {
    const auto [x, w] = gauss_legendre(128, static_cast<double>(i) / panels, static_cast<double>(i + 1) / panels);
    rule.x.insert(rule.x.end(), x.begin(), x.end());
    rule.w.insert(rule.w.end(), w.begin(), w.end());
  }
  return cache.emplace(panels, std::move(rule)).first->second;
}

double double_factorial(int n) {
  double v = 1.0;
  for (int k = n; k > 1; k -= 2) v *= k;
  return v;
}

// Moments (2 pi)^{-3} int dOmega p^alpha e^{-+ i p.xi} damp(p) in the frame where xi = (t, 0, 0, r).
struct MomentTable {
  double eps = 0.0;
  std::vector<Complex> minus;
  std::vector<Complex> plus;
};

MomentTable moment_table(double mass, double t, double r, double eps, int degree, const KernelConfig& cfg) {
  if (!(eps > 0.0)) throw DomainError("bracket kernel: damping parameters must be positive");
  const bool energy = cfg.damping == Damping::energy;
  const double cutoff = energy ? cfg.tail / eps : std::sqrt(cfg.tail / eps);
  const double omega = r + std::abs(t);
  double h = omega > 0.0 ? std::min(2.0, cfg.panel_phase / omega) : 2.0;
  const int panels = static_cast<int>(std::ceil(cutoff / h));
  h = cutoff / panels;
  static const auto panel_rule = gauss_legendre(16, 0.0, 1.0);

  // (k, l) pairs for int u^k (1 - u^2)^l e^{i a u} du, k + 2 l <= degree
  const int kmax = degree;
  const int lmax = degree / 2;
  const auto mono = monomials(degree);
  std::vector<double> angular(mono.size(), 0.0);  // phi average of cos^b sin^c
  for (std::size_t c = 0; c < mono.size(); ++c) {
    const int b = mono[c][1];
    const int d = mono[c][2];
    if (b % 2 == 0 && d % 2 == 0) angular[c] = double_factorial(b - 1) * double_factorial(d - 1) / double_factorial(b + d);
  }

  MomentTable table;
  table.eps = eps;
  table.minus.assign(mono.size(), Complex(0.0, 0.0));
  table.plus.assign(mono.size(), Complex(0.0, 0.0));
  std::vector<Complex> j((kmax + 1) * (lmax + 1));
  const double norm = 1.0 / (8.0 * M_PI * M_PI);

  for (int panel = 0; panel < panels; ++panel) {
    for (std::size_t q = 0; q < panel_rule.first.size(); ++q) {
      const double p = h * (panel + panel_rule.first[q]);
      const double p0 = std::sqrt(mass * mass + p * p);
      const double damp = energy ? std::exp(-eps * p0) : std::exp(-eps * p * p);
      const double weight = h * panel_rule.second[q] * p * p / p0 * damp * norm;
      if (weight == 0.0) continue;

      // J_{k,l}(p r), summing each node with its mirror so that the parity in u is exact
      const double a = p * r;
      const HalfRule& rule = theta_rule(a);
      std::fill(j.begin(), j.end(), Complex(0.0, 0.0));
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double u = rule.x[i];
        const double c2 = 2.0 * std::cos(a * u) * rule.w[i];
        const double s2 = 2.0 * std::sin(a * u) * rule.w[i];
        const double v = 1.0 - u * u;
        double uk = 1.0;
        for (int k = 0; k <= kmax; ++k) {
          double vl = 1.0;
          for (int l = 0; 2 * l + k <= degree; ++l) {
            if (k % 2 == 0) {
              j[k * (lmax + 1) + l] += uk * vl * c2;
            } else {
              j[k * (lmax + 1) + l] += Complex(0.0, uk * vl * s2);
            }
            vl *= v;
          }
          uk *= u;
        }
      }

      const Complex phase = std::polar(1.0, -p0 * t);  // e^{-i p^0 t}
      for (std::size_t c = 0; c < mono.size(); ++c) {
        if (angular[c] == 0.0) continue;
        const auto& m = mono[c];
        const int l = (m[1] + m[2]) / 2;
        const int k = m[3];
        const double base = weight * angular[c] * std::pow(p0, m[0]) * std::pow(p, m[1] + m[2] + m[3]);
        const Complex jj = j[k * (lmax + 1) + l];
        table.minus[c] += base * phase * jj;
        table.plus[c] += base * std::conj(phase) * (k % 2 == 0 ? jj : -jj);
      }
    }
  }
  return table;
}

struct Frame {
  double t = 0.0;
  double r = 0.0;
  SL2C rotation;
};

Frame make_frame(const FourVector& xi) {
  Frame f;
  f.t = xi[0];
  const Vec3 v = spatial(xi);
  f.r = v.norm();
  if (f.r > 0.0) f.rotation = frame_rotation(v / f.r);
  return f;
}

std::vector<MomentTable> moment_sequence(double mass, const Frame& frame, int degree, const KernelConfig& cfg) {
  if (cfg.eps.empty()) throw DomainError("bracket kernel: empty damping sequence");
  std::vector<MomentTable> out;
  for (double e : cfg.eps) out.push_back(moment_table(mass, frame.t, frame.r, e, degree, cfg));
  return out;
}

// Polynomial extrapolation to eps = 0 (Neville), with the spread between the last two orders.
void extrapolate(KernelSequence& seq) {
  const std::size_t n = seq.values.size();
  std::vector<MatX> p = seq.values;
  MatX previous = p.back();
  for (std::size_t m = 1; m < n; ++m) {
    if (m == n - 1) previous = p[1];
    for (std::size_t i = 0; i + m < n; ++i) {
      const double xi = seq.eps[i];
      const double xm = seq.eps[i + m];
      p[i] = (xi * p[i + 1] - xm * p[i]) / (xi - xm);
    }
  }
  seq.extrapolated = p[0];
  seq.extrapolation_error = n > 1 ? max_abs(MatX(p[0] - previous)) : 0.0;
}

KernelSequence assemble(const std::vector<MomentTable>& tables, const Frame& frame, const MatrixPolynomial& p_minus,
                        const MatrixPolynomial& p_plus, int degree, int sign) {
  const Mat2 rot = frame.rotation.matrix();
  const auto rotated = [&](const MatrixPolynomial& poly) {
    return [&poly, rot](const FourVector& p) { return poly(act(rot, p)); };
  };
  const std::vector<MatX> cm = polarize(rotated(p_minus), degree);
  const std::vector<MatX> cp = polarize(rotated(p_plus), degree);
  KernelSequence seq;
  for (const auto& table : tables) {
    MatX k = MatX::Zero(cm[0].rows(), cm[0].cols());
    for (std::size_t c = 0; c < cm.size(); ++c) {
      k += table.minus[c] * cm[c] + static_cast<double>(sign) * table.plus[c] * cp[c];
    }
    seq.eps.push_back(table.eps);
    seq.values.push_back(k);
  }
  extrapolate(seq);
  return seq;
}

MatrixPolynomial spin_polynomial(SpinLabel s, double mass) {
  const double scale = std::pow(mass, -s.twice());
  return [s, scale](const FourVector& p) { return MatX(scale * spin_rep(s, to_hermitian(p))); };
}

void require_mass(double mass) {
  if (!(mass > 0.0)) throw DomainError("bracket kernels need a positive mass");
}

}  // namespace

Damping parse_damping(const std::string& name) {
  if (name == "energy") return Damping::energy;
  if (name == "gaussian") return Damping::gaussian;
  throw DomainError("unknown damping '" + name + "' (energy | gaussian)");
}

std::vector<double> KernelSequence::magnitudes() const {
  std::vector<double> out;
  for (const auto& v : values) out.push_back(v.norm());
  return out;
}

KernelSequence damped_kernel(const MatrixPolynomial& p_minus, const MatrixPolynomial& p_plus, int degree, int sign,
                             double mass, const FourVector& xi, const KernelConfig& config) {
  require_mass(mass);
  const Frame frame = make_frame(xi);
  return assemble(moment_sequence(mass, frame, degree, config), frame, p_minus, p_plus, degree, sign);
}

KernelSequence bracket_kernel(SpinLabel s, double mass, const FourVector& xi, Bracket bracket,
                              const KernelConfig& config) {
  require_mass(mass);
  const auto poly = spin_polynomial(s, mass);
  return damped_kernel(poly, poly, s.twice(), bracket_sign(bracket), mass, xi, config);
}

MatX bracket_kernel_grid(SpinLabel s, const MomentumGrid& grid, const FourVector& xi, Bracket bracket,
                         const std::vector<std::size_t>& nodes) {
  require_mass(grid.mass());
  const auto poly = spin_polynomial(s, grid.mass());
  const double sign = bracket_sign(bracket);
  std::vector<char> member(grid.size(), nodes.empty() ? 1 : 0);
  for (std::size_t k : nodes) {
    if (k >= grid.size()) throw DomainError("bracket_kernel_grid: node index out of range");
    member[k] = 1;
  }
  const auto term = [&](std::size_t k) {
    const FourVector& p = grid.node(k);
    const double theta = minkowski_dot(p, xi);
    const Complex e(std::cos(theta), -std::sin(theta));
    return MatX(grid.weight(k) * poly(p) * (e + sign * std::conj(e)));
  };
  MatX out = MatX::Zero(s.dim(), s.dim());
  std::vector<char> done(grid.size(), 0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!member[k] || done[k]) continue;
    done[k] = 1;
    const auto m = grid.mirror(k);
    if (m && member[*m] && !done[*m]) {
      done[*m] = 1;
      out += term(k) + term(*m);
    } else {
      out += term(k);
    }
  }
  return out / std::pow(2.0 * M_PI, 3);
}

MatX bw_polynomial(SpinLabel s, double mass, const FourVector& p, int sign) {
  const auto& g = dirac_gammas();
  const FourVector pl = p.lowered();
  MatX slash = static_cast<double>(sign) * mass * MatX::Identity(4, 4);
  for (int mu = 0; mu < 4; ++mu) slash += pl[mu] * g[static_cast<std::size_t>(mu)];
  MatX out = MatX::Identity(1, 1);
  for (int j = 0; j < s.twice(); ++j) {
    MatX next(out.rows() * 4, out.cols() * 4);
    for (Eigen::Index a = 0; a < out.rows(); ++a)
      for (Eigen::Index b = 0; b < out.cols(); ++b) next.block(a * 4, b * 4, 4, 4) = out(a, b) * slash;
    out = next;
  }
  return out;
}

KernelSequence bw_bracket(SpinLabel s, double mass, const FourVector& xi, Bracket bracket,
                          const KernelConfig& config) {
  require_mass(mass);
  const auto minus = [s, mass](const FourVector& p) { return bw_polynomial(s, mass, p, 1); };
  const auto plus = [s, mass](const FourVector& p) { return bw_polynomial(s, mass, p, -1); };
  return damped_kernel(minus, plus, s.twice(), bracket_sign(bracket), mass, xi, config);
}

MatX bw_bracket_grid(SpinLabel s, const MomentumGrid& grid, const FourVector& xi, Bracket bracket) {
  require_mass(grid.mass());
  const double sign = bracket_sign(bracket);
  const auto term = [&](std::size_t k) {
    const FourVector& p = grid.node(k);
    const double theta = minkowski_dot(p, xi);
    const Complex e(std::cos(theta), -std::sin(theta));
    return MatX(grid.weight(k) * (e * bw_polynomial(s, grid.mass(), p, 1) +
                                  sign * std::conj(e) * bw_polynomial(s, grid.mass(), p, -1)));
  };
  const auto dim = static_cast<Eigen::Index>(std::pow(4, s.twice()));
  MatX out = MatX::Zero(dim, dim);
  std::vector<char> done(grid.size(), 0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (done[k]) continue;
    done[k] = 1;
    const auto m = grid.mirror(k);
    if (m && !done[*m]) {
      done[*m] = 1;
      out += term(k) + term(*m);
    } else {
      out += term(k);
    }
  }
  return out / std::pow(2.0 * M_PI, 3);
}

JordanPauli jordan_pauli_delta(double mass, const FourVector& xi, const KernelConfig& config,
                               double light_cone_floor) {
  JordanPauli out;
  out.near_light_cone = std::abs(minkowski_dot(xi, xi)) * mass * mass < light_cone_floor;
  const KernelSequence k = bracket_kernel(SpinLabel(0), mass, xi, Bracket::commutator, config);
  // i Delta = K
  out.value = k.extrapolated(0, 0).imag();
  out.imaginary = -k.extrapolated(0, 0).real();
  out.extrapolation_error = k.extrapolation_error;
  for (const auto& v : k.values) out.sequence.push_back(v(0, 0).imag());
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::vector<FourVector> default_test_points(double mass) {
  require_mass(mass);
  const Vec3 n = Vec3(1.0, 2.0, 2.0) / 3.0;
  std::vector<FourVector> out;
  for (double d : {1.0, 2.0, 4.0}) {
    const double t = d / mass * std::sinh(0.3);
    const double x = d / mass * std::cosh(0.3);
    out.emplace_back(t, x * n.x(), x * n.y(), x * n.z());
  }
  return out;
}

StatisticsReport spin_statistics_verdict(const VerdictConfig& config) {
  require_mass(config.mass);
  if (config.twice_spins.empty()) throw DomainError("spin_statistics_verdict: no spins requested");
  if (!(config.ratio > 1.0)) throw DomainError("spin_statistics_verdict: separation ratio must exceed 1");
  const std::vector<FourVector> points = config.points.empty() ? default_test_points(config.mass) : config.points;
  const int degree = *std::max_element(config.twice_spins.begin(), config.twice_spins.end());
  if (degree < 0) throw DomainError("spin_statistics_verdict: negative spin");

  StatisticsReport report;
  bool all_separated = true;
  bool reversed = false;
  bool evaluated = false;
  for (const FourVector& xi : points) {
    const double interval = minkowski_dot(xi, xi) * config.mass * config.mass;
    const bool near = std::abs(interval) < config.light_cone_floor;
    if (near) {
      report.warnings.push_back("point near the light cone skipped (m^2 xi.xi = " + std::to_string(interval) + ")");
    } else if (interval > 0.0) {
      report.warnings.push_back("timelike point: locality does not constrain the kernel there");
    }
    const Frame frame = make_frame(xi);
    std::vector<MomentTable> tables;
    if (!near) tables = moment_sequence(config.mass, frame, degree, config.kernel);
    for (int twice : config.twice_spins) {
      const SpinLabel s(twice);
      PointReport pr;
      pr.twice_s = twice;
      pr.xi = xi;
      pr.local = local_bracket(s);
      pr.skipped = near;
      if (!near) {
        const auto poly = spin_polynomial(s, config.mass);
        const Bracket other = pr.local == Bracket::commutator ? Bracket::anticommutator : Bracket::commutator;
        pr.local_kernel = assemble(tables, frame, poly, poly, twice, bracket_sign(pr.local));
        pr.nonlocal_kernel = assemble(tables, frame, poly, poly, twice, bracket_sign(other));
        const double local = pr.local_kernel.magnitude();
        const double nonlocal = pr.nonlocal_kernel.magnitude();
        pr.ratio = local > 0.0 ? nonlocal / local : std::numeric_limits<double>::infinity();
        const auto mags = pr.local_kernel.magnitudes();
        pr.monotone = std::is_sorted(mags.rbegin(), mags.rend()) &&
                      std::adjacent_find(mags.begin(), mags.end()) == mags.end();
        if (interval < 0.0) {
          evaluated = true;
          if (pr.ratio < config.ratio) all_separated = false;
          if (pr.ratio <= 1.0 / config.ratio) reversed = true;
        }
      }
      report.points.push_back(std::move(pr));
    }
  }
  if (!evaluated) {
    report.verdict = Verdict::inconclusive;
    report.warnings.push_back("no spacelike point evaluated: no verdict");
  } else if (reversed) {
    report.verdict = Verdict::fail;
  } else {
    report.verdict = all_separated ? Verdict::pass : Verdict::inconclusive;
  }
  return report;
}

}  // namespace poincare
