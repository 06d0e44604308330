#include "poincare/fields.hpp"

#include <cmath>

namespace poincare {

namespace {

constexpr Complex kI{0.0, 1.0};

// Applies op (out x in) to tensor slot `slot`; dims[j] is the current size of slot j.
VecX apply_slot(const VecX& v, std::vector<int>& dims, std::size_t slot, const MatX& op) {
  Eigen::Index left = 1;
  Eigen::Index right = 1;
  for (std::size_t j = 0; j < slot; ++j) left *= dims[j];
  for (std::size_t j = slot + 1; j < dims.size(); ++j) right *= dims[j];
  const Eigen::Index in = dims[slot];
  const Eigen::Index out = op.rows();
  if (op.cols() != in) throw std::logic_error("apply_slot: dimension mismatch");
  VecX r = VecX::Zero(left * out * right);
  for (Eigen::Index l = 0; l < left; ++l)
    for (Eigen::Index i = 0; i < out; ++i)
      for (Eigen::Index j = 0; j < in; ++j) {
        const Complex c = op(i, j);
        if (c == Complex(0.0)) continue;
        r.segment((l * out + i) * right, right) += c * v.segment((l * in + j) * right, right);
      }
  dims[slot] = static_cast<int>(out);
  return r;
}

// Product of one operator per slot.
VecX apply_slots(VecX v, int local, const std::vector<MatX>& ops) {
  std::vector<int> dims(ops.size(), local);
  for (std::size_t j = 0; j < ops.size(); ++j) v = apply_slot(v, dims, j, ops[j]);
  return v;
}

VecX swap_slots(const VecX& v, int local, int slots, int i, int j) {
  VecX out(v.size());
  std::vector<int> digits(static_cast<std::size_t>(slots));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    Eigen::Index rest = k;
    for (int s = slots - 1; s >= 0; --s) {
      digits[static_cast<std::size_t>(s)] = static_cast<int>(rest % local);
      rest /= local;
    }
    std::swap(digits[static_cast<std::size_t>(i)], digits[static_cast<std::size_t>(j)]);
    Eigen::Index t = 0;
    for (int d : digits) t = t * local + d;
    out[t] = v[k];
  }
  return out;
}

double relative(double residual, double scale) { return scale > 0.0 ? residual / scale : residual; }

Field make_field(const GridPtr& grid, SpinLabel s, FieldLayout layout, BoostChoice section) {
  Field out;
  out.grid = grid;
  out.spin = s;
  out.layout = layout;
  out.section = section;
  out.values = MatX::Zero(static_cast<Eigen::Index>(grid->size()), component_count(layout, s));
  return out;
}

void require_layout(const Field& f, FieldLayout layout, const char* what) {
  if (f.layout != layout) throw DomainError(std::string(what) + " expects a " + layout_name(layout) + " field");
}

void set_row(Field& f, std::size_t k, const VecX& v) { f.values.row(static_cast<Eigen::Index>(k)) = v.transpose(); }

Mat2 eps_inverse() { return epsilon().inverse(); }

// B on every slot of the symmetric embedding of f.
VecX bw_at(SpinLabel s, const MatX& b, const VecX& f) {
  return apply_slots(symmetric_embedding(s) * f, 2, std::vector<MatX>(static_cast<std::size_t>(s.twice()), b));
}

VecX pf_at(SpinLabel s, int dotted, const Mat2& l, const Mat2& lhat, const VecX& f) {
  std::vector<MatX> ops;
  for (int j = 0; j < s.twice(); ++j) ops.emplace_back(j < s.twice() - dotted ? MatX(l) : MatX(lhat));
  return apply_slots(symmetric_embedding(s) * f, 2, ops);
}

// Turns slots (a, b) of a three-slot spinor tensor into a lower vector index:
// X = sum T[., a, b] e_a (eps^{-1} e_b)^T, x^mu = tr(sigma_mu X) / 2, x_mu = eta x^mu.
std::array<Eigen::Vector2cd, 4> vectorize(const VecX& t) {
  const Mat2 einv = eps_inverse();
  std::array<Eigen::Vector2cd, 4> out;
  for (auto& o : out) o.setZero();
  for (int free = 0; free < 2; ++free) {
    Mat2 x = Mat2::Zero();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        // e_a (eps^{-1} e_b)^T has row a equal to column b of eps^{-1}, transposed
        for (int c = 0; c < 2; ++c) x(a, c) += t[free * 4 + a * 2 + b] * einv(c, b);
      }
    for (int mu = 0; mu < 4; ++mu) {
      const Complex up = 0.5 * (sigma(mu) * x).trace();
      out[static_cast<std::size_t>(mu)][free] = mu == 0 ? up : -up;
    }
  }
  return out;
}

VecX rs_raw(const Mat2& l, const Mat2& lhat, const VecX& f) {
  const SpinLabel s(3);
  const VecX undotted = pf_at(s, 1, l, lhat, f);  // slots (u, u, d)
  const VecX dotted = pf_at(s, 2, l, lhat, f);    // slots (u, d, d)
  // free index first: (u; u, d) is already in order, (d; u, d) needs slot 0 and 1 swapped
  const auto x = vectorize(undotted);
  const auto y = vectorize(swap_slots(dotted, 2, 3, 0, 1));
  VecX out(16);
  for (int mu = 0; mu < 4; ++mu) {
    out.segment(4 * mu, 2) = x[static_cast<std::size_t>(mu)];
    out.segment(4 * mu + 2, 2) = y[static_cast<std::size_t>(mu)];
  }
  return out;
}

double rs_scale() {
  static const double scale = [] {
    MatX raw(16, 4);
    for (int i = 0; i < 4; ++i) raw.col(i) = rs_raw(Mat2::Identity(), Mat2::Identity(), VecX::Unit(4, i));
    return 1.0 / Eigen::JacobiSVD<MatX>(raw).singularValues()[0];
  }();
  return scale;
}

MatX rs_node_map(BoostChoice section, double m, const FourVector& p) {
  const SL2C l = boost(section, m, p);
  const Mat2 lhat = hat(l);
  MatX map(16, 4);
  for (int i = 0; i < 4; ++i) map.col(i) = rs_scale() * rs_raw(l, lhat, VecX::Unit(4, i));
  return map;
}

// S(A) on the components of one node.
VecX transform_components(const Field& f, const SL2C& a, const VecX& v) {
  const SpinLabel s = f.spin;
  switch (f.layout) {
    case FieldLayout::phi:
      return spin_rep(s, a) * v;
    case FieldLayout::chi:
      return hat_rep(s, a) * v;
    case FieldLayout::bispinor: {
      VecX out(v.size());
      out.head(s.dim()) = spin_rep(s, a) * v.head(s.dim());
      out.tail(s.dim()) = hat_rep(s, a) * v.tail(s.dim());
      return out;
    }
    case FieldLayout::bw: {
      MatX sa = MatX::Zero(4, 4);
      sa.topLeftCorner(2, 2) = a.matrix();
      sa.bottomRightCorner(2, 2) = hat(a);
      return apply_slots(v, 4, std::vector<MatX>(static_cast<std::size_t>(s.twice()), sa));
    }
    case FieldLayout::pf: {
      std::vector<MatX> ops;
      for (int j = 0; j < s.twice(); ++j) ops.emplace_back(j < f.undotted ? MatX(a.matrix()) : MatX(hat(a)));
      return apply_slots(v, 2, ops);
    }
    case FieldLayout::rs: {
      MatX sa = MatX::Zero(4, 4);
      sa.topLeftCorner(2, 2) = a.matrix();
      sa.bottomRightCorner(2, 2) = hat(a);
      const Mat4 inv = covering_map(a).inverse().m;
      VecX out = VecX::Zero(16);
      // psi'_mu = (Lambda^{-1})^nu_mu S(A) psi_nu
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) out.segment(4 * mu, 4) += inv(nu, mu) * (sa * v.segment(4 * nu, 4));
      return out;
    }
  }
  throw std::logic_error("unknown layout");
}

}  // namespace

std::string layout_name(FieldLayout layout) {
  switch (layout) {
    case FieldLayout::phi: return "phi";
    case FieldLayout::chi: return "chi";
    case FieldLayout::bispinor: return "bispinor";
    case FieldLayout::bw: return "bw";
    case FieldLayout::pf: return "pf";
    case FieldLayout::rs: return "rs";
  }
  return "?";
}

FieldLayout parse_layout(const std::string& name) {
  for (FieldLayout l : {FieldLayout::phi, FieldLayout::chi, FieldLayout::bispinor, FieldLayout::bw, FieldLayout::pf,
                        FieldLayout::rs})
    if (layout_name(l) == name) return l;
  throw DomainError("unknown field layout '" + name + "'");
}

int component_count(FieldLayout layout, SpinLabel s) {
  switch (layout) {
    case FieldLayout::phi:
    case FieldLayout::chi: return s.dim();
    case FieldLayout::bispinor: return 2 * s.dim();
    case FieldLayout::bw: return 1 << (2 * s.twice());
    case FieldLayout::pf: return 1 << s.twice();
    case FieldLayout::rs: return 16;
  }
  return 0;
}

Field phi_from_f(const WaveFunction& f, BoostChoice section) {
  Field out = make_field(f.grid, f.spin, FieldLayout::phi, section);
  for (std::size_t k = 0; k < f.size(); ++k)
    set_row(out, k, spin_rep(f.spin, boost(section, f.mass(), f.grid->node(k))) * f.at(k));
  return out;
}

Field chi_from_f(const WaveFunction& f, BoostChoice section) {
  Field out = make_field(f.grid, f.spin, FieldLayout::chi, section);
  for (std::size_t k = 0; k < f.size(); ++k)
    set_row(out, k, hat_rep(f.spin, boost(section, f.mass(), f.grid->node(k))) * f.at(k));
  return out;
}

Field bispinor(const Field& phi, const Field& chi) {
  require_layout(phi, FieldLayout::phi, "bispinor");
  require_layout(chi, FieldLayout::chi, "bispinor");
  if (phi.grid != chi.grid || !(phi.spin == chi.spin)) throw DomainError("bispinor: fields do not match");
  Field out = make_field(phi.grid, phi.spin, FieldLayout::bispinor, phi.section);
  out.values << phi.values, chi.values;
  return out;
}

Field bispinor_from_f(const WaveFunction& f, BoostChoice section) {
  return bispinor(phi_from_f(f, section), chi_from_f(f, section));
}

double field_norm(const Field& field) {
  const double m = field.mass();
  const SpinLabel s = field.spin;
  double acc = 0.0;
  switch (field.layout) {
    case FieldLayout::phi:
    case FieldLayout::chi:
    case FieldLayout::bispinor:
      for (std::size_t k = 0; k < field.size(); ++k) {
        const Mat2 p = to_hermitian(field.grid->node(k)) / m;
        const VecX v = field.at(k);
        double local = 0.0;
        if (field.layout != FieldLayout::chi) {
          const VecX phi = v.head(s.dim());
          local += phi.dot(spin_rep(s, hat(p)) * phi).real();
        }
        if (field.layout != FieldLayout::phi) {
          const VecX chi = v.tail(s.dim());
          local += chi.dot(spin_rep(s, p) * chi).real();
        }
        if (field.layout == FieldLayout::bispinor) local *= 0.5;
        acc += field.grid->weight(k) * local;
      }
      return acc;
    case FieldLayout::bw: {
      const MatX g0 = dirac_gammas()[0];
      const std::vector<MatX> ops(static_cast<std::size_t>(s.twice()), g0);
      for (std::size_t k = 0; k < field.size(); ++k) {
        const VecX v = field.at(k);
        acc += field.grid->weight(k) * v.dot(apply_slots(v, 4, ops)).real();
      }
      return std::ldexp(acc, -s.twice());
    }
    case FieldLayout::pf:
    case FieldLayout::rs: {
      const WaveFunction f = to_wigner(field);
      return inner_product(f, f).real();
    }
  }
  return acc;
}

DualityResidual duality_check(const Field& phi, const Field& chi) {
  require_layout(phi, FieldLayout::phi, "duality_check");
  require_layout(chi, FieldLayout::chi, "duality_check");
  DualityResidual r;
  const double m = phi.mass();
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const Mat2 p = to_hermitian(phi.grid->node(k)) / m;
    const MatX dhat = spin_rep(phi.spin, hat(p));
    const MatX d = spin_rep(phi.spin, p);
    const VecX a = phi.at(k);
    const VecX b = chi.at(k);
    r.chi_from_phi = std::max(r.chi_from_phi, relative((b - dhat * a).norm(), dhat.norm() * a.norm()));
    r.phi_from_chi = std::max(r.phi_from_chi, relative((a - d * b).norm(), d.norm() * b.norm()));
  }
  return r;
}

double generalized_dirac_residual(const Field& psi, const GammaSet& gamma) {
  require_layout(psi, FieldLayout::bispinor, "generalized_dirac_residual");
  const double m2s = std::pow(psi.mass(), psi.spin.twice());
  double worst = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const MatX op = gamma.contract(psi.grid->node(k));
    const VecX v = psi.at(k);
    worst = std::max(worst, relative((op * v - m2s * v).norm(), (op.norm() + m2s) * v.norm()));
  }
  return worst;
}

double generalized_dirac_residual(const Field& psi) {
  return generalized_dirac_residual(psi, gamma_matrices(psi.spin));
}

const std::array<MatX, 4>& dirac_gammas() {
  static const std::array<MatX, 4> g = [] {
    std::array<MatX, 4> out;
    for (int mu = 0; mu < 4; ++mu) {
      MatX m = MatX::Zero(4, 4);
      // upper-index sigma^mu = (1, -sigma_k) and hat sigma^mu = (1, sigma_k), so gamma^mu p_mu has
      // blocks p^mu sigma_mu and its hat
      m.topRightCorner(2, 2) = mu == 0 ? sigma(0) : Mat2(-sigma(mu));
      m.bottomLeftCorner(2, 2) = sigma(mu);
      out[static_cast<std::size_t>(mu)] = m;
    }
    return out;
  }();
  return g;
}

MatX dirac_column(BoostChoice section, double mass, const FourVector& p) {
  const SL2C l = boost(section, mass, p);
  MatX b(4, 2);
  b.topRows(2) = l.matrix();
  b.bottomRows(2) = hat(l);
  return b;
}

Field bw_construct(const WaveFunction& f, BoostChoice section) {
  Field out = make_field(f.grid, f.spin, FieldLayout::bw, section);
  for (std::size_t k = 0; k < f.size(); ++k)
    set_row(out, k, bw_at(f.spin, dirac_column(section, f.mass(), f.grid->node(k)), f.at(k)));
  return out;
}

std::vector<double> bw_residual(const Field& psi) {
  require_layout(psi, FieldLayout::bw, "bw_residual");
  const int n = psi.spin.twice();
  std::vector<double> worst(static_cast<std::size_t>(n), 0.0);
  const double m = psi.mass();
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const FourVector pl = psi.grid->node(k).lowered();
    MatX slash = MatX::Zero(4, 4);
    for (int mu = 0; mu < 4; ++mu) slash += pl[mu] * dirac_gammas()[static_cast<std::size_t>(mu)];
    const VecX v = psi.at(k);
    for (int j = 0; j < n; ++j) {
      std::vector<int> dims(static_cast<std::size_t>(n), 4);
      const VecX r = apply_slot(v, dims, static_cast<std::size_t>(j), slash) - m * v;
      worst[static_cast<std::size_t>(j)] =
          std::max(worst[static_cast<std::size_t>(j)], relative(r.norm(), (slash.norm() + m) * v.norm()));
    }
  }
  return worst;
}

double bw_symmetry_defect(const Field& psi) {
  require_layout(psi, FieldLayout::bw, "bw_symmetry_defect");
  const int n = psi.spin.twice();
  double worst = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const VecX v = psi.at(k);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        worst = std::max(worst, relative((v - swap_slots(v, 4, n, i, j)).cwiseAbs().maxCoeff(), v.cwiseAbs().maxCoeff()));
  }
  return worst;
}

Field pf_construct(const WaveFunction& f, int dotted, BoostChoice section) {
  if (dotted < 0 || dotted > f.spin.twice()) {
    throw DomainError("Pauli-Fierz split needs 0 <= dotted <= 2s, got " + std::to_string(dotted));
  }
  Field out = make_field(f.grid, f.spin, FieldLayout::pf, section);
  out.undotted = f.spin.twice() - dotted;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const SL2C l = boost(section, f.mass(), f.grid->node(k));
    set_row(out, k, pf_at(f.spin, dotted, l, hat(l), f.at(k)));
  }
  return out;
}

PFResidual pf_residual(const Field& phi, const WaveFunction& f) {
  require_layout(phi, FieldLayout::pf, "pf_residual");
  const int n = phi.undotted;
  const int md = phi.dotted();
  const int slots = phi.spin.twice();
  const double m = phi.mass();
  PFResidual r;
  // undotted slot n-1 becomes the first dotted slot, dotted slot n the last undotted one
  const Field more_dotted = n > 0 ? pf_construct(f, md + 1, phi.section) : Field{};
  const Field more_undotted = md > 0 ? pf_construct(f, md - 1, phi.section) : Field{};
  if (n > 0) r.undotted_to_dotted = 0.0;
  if (md > 0) r.dotted_to_undotted = 0.0;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const Mat2 p = to_hermitian(phi.grid->node(k));
    const VecX v = phi.at(k);
    if (n > 0) {
      std::vector<int> dims(static_cast<std::size_t>(slots), 2);
      const VecX lhs = apply_slot(v, dims, static_cast<std::size_t>(n - 1), hat(p));
      r.undotted_to_dotted =
          std::max(r.undotted_to_dotted, relative((lhs - m * more_dotted.at(k)).norm(), p.norm() * v.norm()));
    }
    if (md > 0) {
      std::vector<int> dims(static_cast<std::size_t>(slots), 2);
      const VecX lhs = apply_slot(v, dims, static_cast<std::size_t>(n), p);
      r.dotted_to_undotted =
          std::max(r.dotted_to_undotted, relative((lhs - m * more_undotted.at(k)).norm(), p.norm() * v.norm()));
    }
  }
  return r;
}

Field rarita_schwinger(const WaveFunction& f, BoostChoice section) {
  if (f.spin.twice() != 3) throw DomainError("Rarita-Schwinger fields are built for s = 3/2 only");
  Field out = make_field(f.grid, f.spin, FieldLayout::rs, section);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const SL2C l = boost(section, f.mass(), f.grid->node(k));
    set_row(out, k, rs_scale() * rs_raw(l, hat(l), f.at(k)));
  }
  return out;
}

MatX rs_rest_map() { return rs_node_map(BoostChoice::canonical, 1.0, {1.0, 0.0, 0.0, 0.0}); }

RSResidual rs_residual(const Field& psi) {
  require_layout(psi, FieldLayout::rs, "rs_residual");
  const double m = psi.mass();
  const auto& g = dirac_gammas();
  RSResidual r;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const FourVector pl = psi.grid->node(k).lowered();
    MatX slash = MatX::Zero(4, 4);
    for (int mu = 0; mu < 4; ++mu) slash += pl[mu] * g[static_cast<std::size_t>(mu)];
    const VecX v = psi.at(k);
    VecX contracted = VecX::Zero(4);
    for (int mu = 0; mu < 4; ++mu) {
      const VecX part = v.segment(4 * mu, 4);
      r.dirac = std::max(r.dirac, relative((slash * part - m * part).norm(), (slash.norm() + m) * v.norm()));
      // gamma^mu psi_mu
      contracted += g[static_cast<std::size_t>(mu)] * part;
    }
    r.subsidiary = std::max(r.subsidiary, relative(contracted.norm(), 2.0 * v.norm()));
  }
  return r;
}

WaveFunction to_wigner(const Field& field) {
  WaveFunction out(field.grid, field.spin);
  const SpinLabel s = field.spin;
  const double m = field.mass();
  const MatX embed = symmetric_embedding(s);
  for (std::size_t k = 0; k < field.size(); ++k) {
    const FourVector& p = field.grid->node(k);
    const SL2C l = boost(field.section, m, p);
    const SL2C linv = l.inverse();
    const VecX v = field.at(k);
    VecX f;
    switch (field.layout) {
      case FieldLayout::phi:
      case FieldLayout::bispinor:
        f = spin_rep(s, linv) * v.head(s.dim());
        break;
      case FieldLayout::chi:
        f = hat_rep(s, linv) * v;
        break;
      case FieldLayout::bw: {
        // B^dagger gamma^0 B = 2, so B^dagger gamma^0 / 2 is a left inverse per slot
        const MatX b = dirac_column(field.section, m, p);
        const MatX left = 0.5 * b.adjoint() * dirac_gammas()[0];
        f = embed.adjoint() * apply_slots(v, 4, std::vector<MatX>(static_cast<std::size_t>(s.twice()), left));
        break;
      }
      case FieldLayout::pf: {
        std::vector<MatX> ops;
        for (int j = 0; j < s.twice(); ++j) ops.emplace_back(j < field.undotted ? MatX(linv.matrix()) : MatX(hat(linv)));
        f = embed.adjoint() * apply_slots(v, 2, ops);
        break;
      }
      case FieldLayout::rs:
        f = rs_node_map(field.section, m, p).completeOrthogonalDecomposition().solve(v);
        break;
    }
    out.amp.row(static_cast<Eigen::Index>(k)) = f.transpose();
  }
  return out;
}

Field field_apply(const PoincareElement& g, const Field& field) {
  Field out = field;
  for (std::size_t k = 0; k < field.size(); ++k) {
    const FourVector& p = field.grid->node(k);
    const FourVector q = act_inverse(g.A, p);
    VecX pulled = VecX::Zero(field.values.cols());
    if (auto node = field.grid->find(q)) {
      pulled = field.at(*node);
    } else {
      for (const auto& [j, c] : field.grid->stencil(q)) pulled += c * field.at(j);
    }
    const Complex phase = std::exp(kI * minkowski_dot(p, g.a));
    set_row(out, k, phase * transform_components(field, g.A, pulled));
  }
  return out;
}

MatX x_space_transform(const Field& field, const std::vector<FourVector>& points) {
  const double norm = std::pow(2.0 * M_PI, -1.5);
  MatX out = MatX::Zero(static_cast<Eigen::Index>(points.size()), field.values.cols());
  for (std::size_t i = 0; i < points.size(); ++i) {
    VecX acc = VecX::Zero(field.values.cols());
    for (std::size_t k = 0; k < field.size(); ++k)
      acc += field.grid->weight(k) * std::exp(-kI * minkowski_dot(field.grid->node(k), points[i])) * field.at(k);
    out.row(static_cast<Eigen::Index>(i)) = norm * acc.transpose();
  }
  return out;
}

double klein_gordon_residual(const Field& field, const FourVector& x, double h) {
  std::vector<FourVector> pts{x};
  for (int mu = 0; mu < 4; ++mu)
    for (int step : {-2, -1, 1, 2}) {
      FourVector y = x;
      y[mu] += step * h;
      pts.push_back(y);
    }
  const MatX v = x_space_transform(field, pts);
  const VecX centre = v.row(0).transpose();
  VecX box = VecX::Zero(v.cols());
  for (int mu = 0; mu < 4; ++mu) {
    const auto at = [&](int i) -> VecX { return v.row(1 + 4 * mu + i).transpose(); };
    const VecX second = (-at(0) + 16.0 * at(1) - 30.0 * centre + 16.0 * at(2) - at(3)) / (12.0 * h * h);
    box += mu == 0 ? second : VecX(-second);
  }
  const double m2 = field.mass() * field.mass();
  return relative((box + m2 * centre).norm(), m2 * v.rowwise().norm().maxCoeff());
}

}  // namespace poincare
