#include "poincare/fock.hpp"

#include <algorithm>
#include <cmath>

namespace poincare {

namespace {

double sparse_max_abs(const SparseMat& m) {
  double out = 0.0;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (SparseMat::InnerIterator it(m, k); it; ++it) out = std::max(out, std::abs(it.value()));
  return out;
}

SparseMat diagonal_projector(std::size_t dim, const std::function<bool(std::size_t)>& keep) {
  std::vector<Eigen::Triplet<Complex>> t;
  for (std::size_t i = 0; i < dim; ++i)
    if (keep(i)) t.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), 1.0);
  SparseMat p(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  p.setFromTriplets(t.begin(), t.end());
  return p;
}

void validate(const ModeSet& modes) {
  if (!modes.grid) throw DomainError("mode set without a grid");
  if (modes.cutoff < 1) throw DomainError("boson occupation cutoff must be at least 1");
  if (modes.modes.empty()) throw DomainError("mode set is empty");
  for (std::size_t i = 0; i < modes.modes.size(); ++i) {
    const Mode& m = modes.modes[i];
    if (m.node >= modes.grid->size()) throw DomainError("mode node index out of range");
    if (m.lambda < 0 || m.lambda >= modes.spin.dim()) throw DomainError("mode spin index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (modes.modes[j] == m) throw DomainError("mode set contains a repeated mode");
  }
}

double factorial(int n) {
  double v = 1.0;
  for (int k = 2; k <= n; ++k) v *= k;
  return v;
}

}  // namespace

ModeSet ModeSet::multiplets(GridPtr grid, SpinLabel s, Statistics stat, const std::vector<std::size_t>& nodes,
                            int cutoff) {
  ModeSet out;
  out.grid = std::move(grid);
  out.spin = s;
  out.statistics = stat;
  out.cutoff = cutoff;
  for (std::size_t n : nodes)
    for (int l = 0; l < s.dim(); ++l) out.modes.push_back({n, l});
  return out;
}

std::vector<int> FockSpace::occupation(std::size_t state) const {
  const int base = levels();
  std::vector<int> n(modes.size());
  for (std::size_t k = modes.size(); k-- > 0;) {
    n[k] = static_cast<int>(state % static_cast<std::size_t>(base));
    state /= static_cast<std::size_t>(base);
  }
  return n;
}

int FockSpace::total(std::size_t state) const {
  const auto n = occupation(state);
  int t = 0;
  for (int x : n) t += x;
  return t;
}

VecX FockSpace::vacuum() const {
  VecX v = VecX::Zero(static_cast<Eigen::Index>(dimension));
  v[0] = 1.0;
  return v;
}

SparseMat FockSpace::identity() const {
  SparseMat id(static_cast<Eigen::Index>(dimension), static_cast<Eigen::Index>(dimension));
  id.setIdentity();
  return id;
}

FockSpace fock_build(const ModeSet& modes, std::size_t max_dimension) {
  validate(modes);
  FockSpace fock;
  fock.modes = modes;
  const auto base = static_cast<std::size_t>(fock.levels());
  std::size_t dim = 1;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    if (dim > max_dimension / base) {
      throw DomainError("Fock space dimension exceeds the bound " + std::to_string(max_dimension));
    }
    dim *= base;
  }
  fock.dimension = dim;

  std::size_t stride = dim;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    stride /= base;
    std::vector<Eigen::Triplet<Complex>> t;
    for (std::size_t state = 0; state < dim; ++state) {
      const auto n = fock.occupation(state);
      if (n[k] == 0) continue;
      double value;
      if (modes.statistics == Statistics::fermi) {
        int parity = 0;
        for (std::size_t j = 0; j < k; ++j) parity += n[j];
        value = parity % 2 == 0 ? 1.0 : -1.0;
      } else {
        value = std::sqrt(static_cast<double>(n[k]));
      }
      t.emplace_back(static_cast<Eigen::Index>(state - stride), static_cast<Eigen::Index>(state), value);
    }
    SparseMat a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    a.setFromTriplets(t.begin(), t.end());
    fock.adag.push_back(SparseMat(a.adjoint()));
    fock.a.push_back(std::move(a));
  }
  return fock;
}

AlgebraDefect algebra_check(const FockSpace& fock) {
  AlgebraDefect out;
  const bool fermi = fock.modes.statistics == Statistics::fermi;
  const double sign = fermi ? 1.0 : -1.0;
  const SparseMat id = fock.identity();
  const std::size_t m = fock.modes.size();
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      const SparseMat aa = SparseMat(fock.a[k] * fock.a[l]) + sign * SparseMat(fock.a[l] * fock.a[k]);
      out.mixed = std::max(out.mixed, sparse_max_abs(aa));
      const SparseMat ad = SparseMat(fock.a[k] * fock.adag[l]) + sign * SparseMat(fock.adag[l] * fock.a[k]);
      if (k != l) {
        out.mixed = std::max(out.mixed, sparse_max_abs(ad));
        continue;
      }
      const SparseMat defect = ad - id;
      for (Eigen::Index col = 0; col < defect.outerSize(); ++col) {
        const bool top = !fermi && fock.occupation(static_cast<std::size_t>(col))[k] == fock.modes.cutoff;
        for (SparseMat::InnerIterator it(defect, col); it; ++it) {
          double& slot = top ? out.top : out.diagonal;
          slot = std::max(slot, std::abs(it.value()));
        }
      }
    }
  }
  return out;
}

SparseMat number_projector(const FockSpace& fock, int n) {
  return diagonal_projector(fock.dimension, [&](std::size_t i) { return fock.total(i) <= n; });
}

ModeFunctions mode_functions(const ModeSet& modes, const FourVector& x, BoostChoice section) {
  validate(modes);
  const SpinLabel s = modes.spin;
  const double m = modes.grid->mass();
  const auto count = static_cast<Eigen::Index>(modes.size());
  ModeFunctions out{MatX::Zero(s.dim(), count), MatX::Zero(s.dim(), count)};
  for (Eigen::Index k = 0; k < count; ++k) {
    const Mode& mode = modes.modes[static_cast<std::size_t>(k)];
    const FourVector& p = modes.grid->node(mode.node);
    const double c = std::sqrt(modes.grid->weight(mode.node)) * std::pow(2.0 * M_PI, -1.5);
    const Mat2 l = boost(section, m, p).matrix();
    const double theta = minkowski_dot(p, x);
    const Complex e(std::cos(theta), -std::sin(theta));  // e^{-i p.x}
    out.u.col(k) = c * e * spin_rep(s, l).col(mode.lambda);
    out.v.col(k) = c * std::conj(e) * spin_rep(s, Mat2(l * epsilon())).col(mode.lambda);
  }
  return out;
}

std::vector<SparseMat> field_operator(const FockSpace& fock, const FourVector& x, BoostChoice section) {
  const ModeFunctions mf = mode_functions(fock.modes, x, section);
  std::vector<SparseMat> out;
  for (int alpha = 0; alpha < fock.modes.spin.dim(); ++alpha) {
    SparseMat phi(static_cast<Eigen::Index>(fock.dimension), static_cast<Eigen::Index>(fock.dimension));
    for (std::size_t k = 0; k < fock.modes.size(); ++k) {
      const auto col = static_cast<Eigen::Index>(k);
      phi += mf.u(alpha, col) * fock.a[k] + mf.v(alpha, col) * fock.adag[k];
    }
    out.push_back(std::move(phi));
  }
  return out;
}

MatX one_particle_matrix(const ModeSet& modes, const PoincareElement& g, BoostChoice section) {
  validate(modes);
  const auto count = static_cast<Eigen::Index>(modes.size());
  MatX u(count, count);
  for (Eigen::Index k = 0; k < count; ++k) {
    const Mode& mk = modes.modes[static_cast<std::size_t>(k)];
    WaveFunction f(modes.grid, modes.spin);
    f.amp(static_cast<Eigen::Index>(mk.node), mk.lambda) = 1.0 / std::sqrt(modes.grid->weight(mk.node));
    const WaveFunction uf = rep_apply(g, f, section);
    double captured = 0.0;
    for (Eigen::Index i = 0; i < count; ++i) {
      const Mode& mi = modes.modes[static_cast<std::size_t>(i)];
      u(i, k) = std::sqrt(modes.grid->weight(mi.node)) * uf.amp(static_cast<Eigen::Index>(mi.node), mi.lambda);
      captured += std::norm(u(i, k));
    }
    const double total = inner_product(uf, uf).real();
    if (std::abs(total - captured) > tol::inverted || std::abs(total - 1.0) > tol::inverted) {
      throw DomainError("the transformation does not map the span of the modes onto itself");
    }
  }
  return u;
}

SparseMat second_quantize(const FockSpace& fock, const MatX& u1) {
  const std::size_t m = fock.modes.size();
  if (u1.rows() != static_cast<Eigen::Index>(m) || u1.cols() != static_cast<Eigen::Index>(m)) {
    throw DomainError("second_quantize: one-particle matrix has the wrong size");
  }
  const bool bose = fock.modes.statistics == Statistics::bose;
  std::vector<SparseMat> b(m);
  for (std::size_t k = 0; k < m; ++k) {
    SparseMat sum(static_cast<Eigen::Index>(fock.dimension), static_cast<Eigen::Index>(fock.dimension));
    for (std::size_t i = 0; i < m; ++i) {
      const Complex c = u1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
      if (c != Complex(0.0, 0.0)) sum += c * fock.adag[i];
    }
    b[k] = sum;
  }
  std::vector<Eigen::Triplet<Complex>> t;
  for (std::size_t state = 0; state < fock.dimension; ++state) {
    const auto n = fock.occupation(state);
    if (bose && fock.total(state) > fock.modes.cutoff) continue;
    VecX v = fock.vacuum();
    for (std::size_t k = m; k-- > 0;) {
      for (int j = 0; j < n[k]; ++j) v = b[k] * v;
      if (bose) v /= std::sqrt(factorial(n[k]));
    }
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v[i] != Complex(0.0, 0.0)) t.emplace_back(i, static_cast<Eigen::Index>(state), v[i]);
  }
  SparseMat out(static_cast<Eigen::Index>(fock.dimension), static_cast<Eigen::Index>(fock.dimension));
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

double covariance_check(const FockSpace& fock, const PoincareElement& g, const std::vector<FourVector>& points,
                        BoostChoice section) {
  const MatX u1 = one_particle_matrix(fock.modes, g, section);
  const SparseMat u = second_quantize(fock, u1);
  const SparseMat p = fock.modes.statistics == Statistics::bose ? number_projector(fock, fock.modes.cutoff - 1)
                                                                : fock.identity();
  const MatX d_inv = spin_rep(fock.modes.spin, g.A.inverse());
  const SparseMat up = u * p;
  double residual = 0.0;
  for (const FourVector& x : points) {
    const auto phi = field_operator(fock, x, section);
    const auto moved = field_operator(fock, act(g.A, x) + g.a, section);
    double scale = 0.0;
    for (const auto& f : phi) scale = std::max(scale, sparse_max_abs(f));
    for (std::size_t alpha = 0; alpha < phi.size(); ++alpha) {
      SparseMat rhs(static_cast<Eigen::Index>(fock.dimension), static_cast<Eigen::Index>(fock.dimension));
      for (std::size_t beta = 0; beta < moved.size(); ++beta)
        rhs += d_inv(static_cast<Eigen::Index>(alpha), static_cast<Eigen::Index>(beta)) * moved[beta];
      const SparseMat diff = SparseMat(u * phi[alpha] * p) - SparseMat(rhs * up);
      residual = std::max(residual, sparse_max_abs(diff) / std::max(scale, 1e-300));
    }
  }
  return residual;
}

SparseMat smeared_field(const FockSpace& fock, const Smearing& f, BoostChoice section) {
  if (f.coeff.rows() != static_cast<Eigen::Index>(f.points.size()) || f.coeff.cols() != fock.modes.spin.dim()) {
    throw DomainError("smearing coefficients must be (points) x (2s+1)");
  }
  SparseMat out(static_cast<Eigen::Index>(fock.dimension), static_cast<Eigen::Index>(fock.dimension));
  for (std::size_t j = 0; j < f.points.size(); ++j) {
    const auto phi = field_operator(fock, f.points[j], section);
    for (std::size_t alpha = 0; alpha < phi.size(); ++alpha)
      out += f.coeff(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(alpha)) * phi[alpha];
  }
  return out;
}

SmearedBracket smeared_bracket(const FockSpace& fock, const Smearing& f, const Smearing& g, BoostChoice section) {
  const SparseMat a = smeared_field(fock, f, section);
  const SparseMat b = SparseMat(smeared_field(fock, g, section).adjoint());
  const double sign = bracket_sign(statistics_bracket(fock.modes.statistics));
  const SparseMat br = SparseMat(a * b) + sign * SparseMat(b * a);
  SmearedBracket out;
  out.scalar = br.coeff(0, 0);
  const bool bose = fock.modes.statistics == Statistics::bose;
  const SparseMat residual = br - out.scalar * fock.identity();
  for (Eigen::Index col = 0; col < residual.outerSize(); ++col) {
    if (bose) {
      const auto n = fock.occupation(static_cast<std::size_t>(col));
      if (std::any_of(n.begin(), n.end(), [&](int x) { return x >= fock.modes.cutoff; })) continue;
    }
    for (SparseMat::InnerIterator it(residual, col); it; ++it) out.defect = std::max(out.defect, std::abs(it.value()));
  }
  return out;
}

}  // namespace poincare
