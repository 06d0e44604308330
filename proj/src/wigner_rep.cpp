#include "poincare/wigner_rep.hpp"

#include <cmath>

namespace poincare {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_grid(const WaveFunction& f, const WaveFunction& g) {
  if (!f.grid || !g.grid || !(*f.grid == *g.grid)) throw DomainError("wave functions live on different grids");
  if (!(f.spin == g.spin)) throw DomainError("wave functions have different spin");
}

}  // namespace

WaveFunction::WaveFunction(GridPtr g, SpinLabel s)
    : grid(std::move(g)), spin(s), amp(MatX::Zero(static_cast<Eigen::Index>(grid->size()), s.dim())) {}

WaveFunction::WaveFunction(GridPtr g, SpinLabel s, MatX amplitudes)
    : grid(std::move(g)), spin(s), amp(std::move(amplitudes)) {
  if (amp.rows() != static_cast<Eigen::Index>(grid->size()) || amp.cols() != s.dim()) {
    throw DomainError("amplitude array does not match grid size x (2s+1)");
  }
}

VecX WaveFunction::interpolate(const FourVector& p) const {
  VecX out = VecX::Zero(spin.dim());
  for (const auto& [k, c] : grid->stencil(p)) out += c * at(k);
  return out;
}

Complex inner_product(const WaveFunction& f, const WaveFunction& g) {
  require_same_grid(f, g);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    acc += f.grid->weight(k) * f.amp.row(row).dot(g.amp.row(row));
  }
  return acc;
}

WaveFunction sample(GridPtr grid, SpinLabel s, const Amplitude& f) {
  WaveFunction out(grid, s);
  for (std::size_t k = 0; k < grid->size(); ++k) out.amp.row(static_cast<Eigen::Index>(k)) = f(grid->node(k)).transpose();
  return out;
}

PoincareElement PoincareElement::inverse() const {
  const SL2C inv = A.inverse();
  return {-act(inv, a), inv};
}

namespace {

template <typename Pull>
WaveFunction apply_with(const PoincareElement& g, GridPtr grid, SpinLabel s, BoostChoice choice, Pull&& pull) {
  WaveFunction out(grid, s);
  const double m = grid->mass();
  for (std::size_t k = 0; k < grid->size(); ++k) {
    const FourVector& p = grid->node(k);
    FourVector q = act_inverse(g.A, p);
    // snap to the node so the boost section is evaluated at exactly the stored momentum
    if (auto node = grid->find(q)) q = grid->node(*node);
    const SL2C r = boost(choice, m, p).inverse() * g.A * boost(choice, m, q);
    const Complex phase = std::exp(kI * minkowski_dot(p, g.a));
    out.amp.row(static_cast<Eigen::Index>(k)) = (phase * (spin_rep(s, r) * pull(q))).transpose();
  }
  return out;
}

}  // namespace

WaveFunction rep_apply(const PoincareElement& g, const WaveFunction& f, BoostChoice choice) {
  return apply_with(g, f.grid, f.spin, choice, [&](const FourVector& q) { return f.interpolate(q); });
}

WaveFunction rep_apply(const PoincareElement& g, GridPtr grid, SpinLabel s, const Amplitude& f, BoostChoice choice) {
  return apply_with(g, std::move(grid), s, choice, f);
}

WaveFunction covariant_form(const WaveFunction& f, BoostChoice choice) {
  WaveFunction out(f.grid, f.spin);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    out.amp.row(row) = (spin_rep(f.spin, boost(choice, f.mass(), f.grid->node(k))) * f.at(k)).transpose();
  }
  return out;
}

WaveFunction from_covariant_form(const WaveFunction& psi, BoostChoice choice) {
  WaveFunction out(psi.grid, psi.spin);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    const SL2C l = boost(choice, psi.mass(), psi.grid->node(k));
    out.amp.row(row) = (spin_rep(psi.spin, l.inverse()) * psi.at(k)).transpose();
  }
  return out;
}

Complex covariant_pointwise_product(SpinLabel s, double mass, const FourVector& p, const VecX& psi1,
                                    const VecX& psi2) {
  const MatX metric = spin_rep(s, hat(to_hermitian(p)) / mass);
  return psi1.dot(metric * psi2);
}

WaveFunction covariant_apply(const PoincareElement& g, const WaveFunction& psi) {
  WaveFunction out(psi.grid, psi.spin);
  const MatX d = spin_rep(psi.spin, g.A);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const FourVector& p = psi.grid->node(k);
    const Complex phase = std::exp(kI * minkowski_dot(p, g.a));
    out.amp.row(static_cast<Eigen::Index>(k)) = (phase * (d * psi.interpolate(act_inverse(g.A, p)))).transpose();
  }
  return out;
}

WaveFunction section_intertwiner(const WaveFunction& f) {
  WaveFunction out(f.grid, f.spin);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const FourVector& p = f.grid->node(k);
    const SL2C t = canonical_boost(f.mass(), p).inverse() * helicity_boost(f.mass(), p).boost();
    out.amp.row(static_cast<Eigen::Index>(k)) = (spin_rep(f.spin, t) * f.at(k)).transpose();
  }
  return out;
}

WaveFunction massless_rep_apply(int twice_helicity, const PoincareElement& g, const WaveFunction& f) {
  if (f.mass() != 0.0) throw DomainError("massless_rep_apply needs a light-cone grid");
  if (f.spin.dim() != 1) throw DomainError("massless_rep_apply acts on scalar amplitudes");
  WaveFunction out(f.grid, f.spin);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const FourVector& p = f.grid->node(k);
    FourVector q = act_inverse(g.A, p);
    if (auto node = f.grid->find(q)) q = f.grid->node(*node);
    const SL2C r = massless_boost(p).inverse() * g.A * massless_boost(q);
    const double phi = massless_little_group_decompose(r).phi;
    const Complex phase = std::exp(kI * (minkowski_dot(p, g.a) + 0.5 * twice_helicity * phi));
    out.amp(static_cast<Eigen::Index>(k), 0) = phase * f.interpolate(q)[0];
  }
  return out;
}

const std::vector<SL2C>& binary_octahedral() {
  static const std::vector<SL2C> group = [] {
    const SL2C g1 = exp_traceless(Complex(0.0, -M_PI / 4.0) * sigma(3));
    const SL2C g2 = exp_traceless(Complex(0.0, -M_PI / 4.0) * sigma(1));
    std::vector<SL2C> elems{SL2C()};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const SL2C& g : {g1, g2}) {
        const SL2C h = g * elems[i];
        bool seen = false;
        for (const SL2C& e : elems) seen = seen || max_abs(Mat2(e.matrix() - h.matrix())) < 1e-9;
        if (!seen) elems.push_back(h);
      }
    }
    return elems;
  }();
  return group;
}

}  // namespace poincare
