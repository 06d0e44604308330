#include "poincare/irreps.hpp"

#include <cmath>
#include <string>

namespace poincare {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Row/column index i <-> number of u factors n - i.
int u_count(int n, int index) { return n - index; }

std::vector<Complex> powers(Complex z, int n) {
  std::vector<Complex> p(static_cast<std::size_t>(n) + 1, Complex(1.0, 0.0));
  for (int k = 1; k <= n; ++k) p[k] = p[k - 1] * z;
  return p;
}

}  // namespace

SpinLabel::SpinLabel(int twice_s) : twice_(twice_s) {
  if (twice_s < 0) throw DomainError("SpinLabel: 2s must be non-negative, got " + std::to_string(twice_s));
}

MatX spin_rep(SpinLabel s, const Mat2& a) {
  const int n = s.twice();
  const auto pa = powers(a(0, 0), n);
  const auto pb = powers(a(0, 1), n);
  const auto pc = powers(a(1, 0), n);
  const auto pd = powers(a(1, 1), n);

  MatX d = MatX::Zero(n + 1, n + 1);
  for (int col = 0; col <= n; ++col) {
    // T_A(u^ju v^jv) = (a u + c v)^ju (b u + d v)^jv
    const int ju = u_count(n, col);
    const int jv = n - ju;
    const double norm_col = std::sqrt(factorial(ju) * factorial(jv));
    for (int k1 = 0; k1 <= ju; ++k1) {
      const Complex left = binomial(ju, k1) * pa[k1] * pc[ju - k1];
      for (int k2 = 0; k2 <= jv; ++k2) {
        const Complex right = binomial(jv, k2) * pb[k2] * pd[jv - k2];
        const int k = k1 + k2;
        const int row = n - k;
        d(row, col) += left * right;
      }
    }
    for (int row = 0; row <= n; ++row) {
      const int k = u_count(n, row);
      d(row, col) *= std::sqrt(factorial(k) * factorial(n - k)) / norm_col;
    }
  }
  return d;
}

MatX hat_rep(SpinLabel s, const Mat2& a) { return spin_rep(s, hat(a)); }

MatX spin_generator(SpinLabel s, const Mat2& x) {
  // Derivation u -> x00 u + x10 v, v -> x01 u + x11 v.
  const int n = s.twice();
  MatX g = MatX::Zero(n + 1, n + 1);
  auto norm = [n](int k) { return std::sqrt(factorial(k) * factorial(n - k)); };
  for (int col = 0; col <= n; ++col) {
    const int j = u_count(n, col);
    g(col, col) += static_cast<double>(j) * x(0, 0) + static_cast<double>(n - j) * x(1, 1);
    if (j > 0) {
      const int row = n - (j - 1);
      g(row, col) += static_cast<double>(j) * x(1, 0) * norm(j - 1) / norm(j);
    }
    if (j < n) {
      const int row = n - (j + 1);
      g(row, col) += static_cast<double>(n - j) * x(0, 1) * norm(j + 1) / norm(j);
    }
  }
  return g;
}

std::array<MatX, 3> angular_momentum(SpinLabel s) {
  return {spin_generator(s, 0.5 * sigma(1)), spin_generator(s, 0.5 * sigma(2)),
          spin_generator(s, 0.5 * sigma(3))};
}

MatX symmetric_embedding(SpinLabel s) {
  const int n = s.twice();
  const int full = 1 << n;
  MatX e = MatX::Zero(full, n + 1);
  for (int index = 0; index < full; ++index) {
    const int ones = __builtin_popcount(static_cast<unsigned>(index));
    const int us = n - ones;  // spinor index 0 is u
    const int col = n - us;
    e(index, col) = 1.0;
  }
  for (int col = 0; col <= n; ++col) e.col(col) /= std::sqrt(binomial(n, col));
  return e;
}

std::vector<std::array<int, 4>> symmetric_multi_indices(int degree) {
  std::vector<std::array<int, 4>> out;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b)
      for (int c = degree - a - b; c >= 0; --c) out.push_back({a, b, c, degree - a - b - c});
  return out;
}

double multinomial(const std::array<int, 4>& alpha) {
  return factorial(alpha[0] + alpha[1] + alpha[2] + alpha[3]) /
         (factorial(alpha[0]) * factorial(alpha[1]) * factorial(alpha[2]) * factorial(alpha[3]));
}

std::size_t GeneralizedSigma::class_of(std::span<const int> mu) const {
  if (static_cast<int>(mu.size()) != spin.twice()) {
    throw DomainError("GeneralizedSigma: expected " + std::to_string(spin.twice()) + " indices");
  }
  std::array<int, 4> counts{0, 0, 0, 0};
  for (int m : mu) {
    if (m < 0 || m > 3) throw DomainError("GeneralizedSigma: Lorentz index out of range");
    ++counts[static_cast<std::size_t>(m)];
  }
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (classes[k] == counts) return k;
  throw DomainError("GeneralizedSigma: index class not found");
}

namespace {

double lowered_monomial(const std::array<int, 4>& alpha, const FourVector& p) {
  const FourVector low = p.lowered();
  double v = 1.0;
  for (int mu = 0; mu < 4; ++mu) v *= std::pow(low[mu], alpha[static_cast<std::size_t>(mu)]);
  return v;
}

MatX contract_classes(const std::vector<std::array<int, 4>>& classes, const std::vector<MatX>& tensors,
                      const FourVector& p, int dim) {
  MatX out = MatX::Zero(dim, dim);
  for (std::size_t k = 0; k < classes.size(); ++k)
    out += (multinomial(classes[k]) * lowered_monomial(classes[k], p)) * tensors[k];
  return out;
}

}  // namespace

MatX GeneralizedSigma::contract(const FourVector& p) const {
  return contract_classes(classes, sigma, p, spin.dim());
}

MatX GeneralizedSigma::contract_hat(const FourVector& p) const {
  return contract_classes(classes, sigma_hat, p, spin.dim());
}

GeneralizedSigma extract_sigma(SpinLabel s) {
  const int n = s.twice();
  const int d = s.dim();
  GeneralizedSigma out;
  out.spin = s;
  out.classes = symmetric_multi_indices(n);
  const auto nodes = symmetric_multi_indices(n);  // integer momenta p^mu = alpha_mu
  const auto count = static_cast<Eigen::Index>(out.classes.size());

  // Vandermonde-type matrix in contravariant monomials.
  Eigen::MatrixXd v(count, count);
  for (Eigen::Index r = 0; r < count; ++r) {
    for (Eigen::Index c = 0; c < count; ++c) {
      double m = 1.0;
      for (int mu = 0; mu < 4; ++mu)
        m *= std::pow(static_cast<double>(nodes[r][mu]), out.classes[c][static_cast<std::size_t>(mu)]);
      v(r, c) = m;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(v);
  if (!lu.isInvertible() || lu.rcond() < 1e-13) {
    throw DomainError("extract_sigma: singular polarization system");
  }

  // Right-hand sides: one column per matrix entry of D(p) and D(hat p).
  Eigen::MatrixXcd rhs(count, 2 * d * d);
  for (Eigen::Index r = 0; r < count; ++r) {
    const FourVector p(nodes[r][0], nodes[r][1], nodes[r][2], nodes[r][3]);
    const Mat2 x = to_hermitian(p);
    const MatX dp = spin_rep(s, x);
    const MatX dh = spin_rep(s, hat(x));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        rhs(r, i * d + j) = dp(i, j);
        rhs(r, d * d + i * d + j) = dh(i, j);
      }
  }
  const Eigen::MatrixXcd coeff = lu.solve(Eigen::MatrixXd::Identity(count, count)).cast<Complex>() * rhs;

  for (Eigen::Index c = 0; c < count; ++c) {
    const auto& alpha = out.classes[c];
    // Contravariant monomial coefficient -> symmetric tensor contracted with p_mu.
    const double sign = ((alpha[1] + alpha[2] + alpha[3]) % 2 == 0) ? 1.0 : -1.0;
    const double scale = sign / multinomial(alpha);
    MatX sg(d, d);
    MatX sh(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        sg(i, j) = scale * coeff(c, i * d + j);
        sh(i, j) = scale * coeff(c, d * d + i * d + j);
      }
    out.sigma.push_back(std::move(sg));
    out.sigma_hat.push_back(std::move(sh));
  }
  return out;
}

GammaSet gamma_matrices(const GeneralizedSigma& sigma) {
  const int d = sigma.spin.dim();
  GammaSet g;
  g.spin = sigma.spin;
  g.classes = sigma.classes;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    MatX m = MatX::Zero(2 * d, 2 * d);
    m.topRightCorner(d, d) = sigma.sigma[k];
    m.bottomLeftCorner(d, d) = sigma.sigma_hat[k];
    g.gamma.push_back(std::move(m));
  }
  return g;
}

GammaSet gamma_matrices(SpinLabel s) { return gamma_matrices(extract_sigma(s)); }

MatX GammaSet::contract(const FourVector& p) const {
  return contract_classes(classes, gamma, p, 2 * spin.dim());
}

}  // namespace poincare
