#include "poincare/mackey.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace poincare {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

std::vector<int> greedy_generators(const FiniteGroup& a) {
  std::vector<int> gens;
  std::vector<char> in(static_cast<std::size_t>(a.size()), 0);
  in[static_cast<std::size_t>(a.identity())] = 1;
  std::vector<int> members{a.identity()};
  for (int x = 0; x < a.size(); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    // close the subgroup under multiplication by the generators found so far
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int g : gens) {
        const int y = a.mul(members[i], g);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          members.push_back(y);
        }
      }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int y = a.mul(members[i], x);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  return gens;
}

// Extends generator images to all of A; empty if the assignment is inconsistent.
std::optional<Character> extend(const FiniteGroup& a, const std::vector<int>& gens, const std::vector<int>& images,
                                int modulus) {
  std::vector<int> k(static_cast<std::size_t>(a.size()), -1);
  k[static_cast<std::size_t>(a.identity())] = 0;
  std::vector<int> queue{a.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const int y = a.mul(x, gens[j]);
      const int val = (k[static_cast<std::size_t>(x)] + images[j]) % modulus;
      if (k[static_cast<std::size_t>(y)] < 0) {
        k[static_cast<std::size_t>(y)] = val;
        queue.push_back(y);
      } else if (k[static_cast<std::size_t>(y)] != val) {
        return std::nullopt;
      }
    }
  }
  return Character{k};
}

std::vector<int> positions(int group_size, const std::vector<int>& elements) {
  std::vector<int> pos(static_cast<std::size_t>(group_size), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[static_cast<std::size_t>(elements[i])] = static_cast<int>(i);
  return pos;
}

Cyclotomic exact_trace(const MatX& m, int order) {
  Eigen::ComplexEigenSolver<MatX> es(m);
  Cyclotomic acc(order);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Complex lambda = es.eigenvalues()[i];
    const double turns = std::arg(lambda) / kTwoPi * order;
    const int j = static_cast<int>(std::lround(turns));
    if (std::abs(lambda - std::polar(1.0, kTwoPi * j / order)) > 1e-8) {
      throw DomainError("eigenvalue is not an " + std::to_string(order) + "-th root of unity");
    }
    acc += Cyclotomic::root(order, j);
  }
  return acc;
}

double character_overlap(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return std::abs(s) / static_cast<double>(x.size());
}

}  // namespace

Complex CharacterGroup::value(int x, int a) const {
  return std::polar(1.0, kTwoPi * chars[static_cast<std::size_t>(x)].k[static_cast<std::size_t>(a)] / modulus);
}

Cyclotomic CharacterGroup::exact(int x, int a, int order) const {
  if (order % modulus != 0) throw DomainError("cyclotomic order must be a multiple of the character modulus");
  return Cyclotomic::root(order, chars[static_cast<std::size_t>(x)].k[static_cast<std::size_t>(a)] * (order / modulus));
}

int CharacterGroup::index_of(const Character& c) const {
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (chars[i] == c) return static_cast<int>(i);
  throw DomainError("character not found");
}

int CharacterGroup::trivial() const {
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (std::all_of(chars[i].k.begin(), chars[i].k.end(), [](int v) { return v == 0; })) return static_cast<int>(i);
  throw DomainError("no trivial character");
}

CharacterGroup character_group(const FiniteGroup& a) {
  if (!a.abelian()) throw DomainError("character_group: group is not abelian");
  CharacterGroup out;
  out.modulus = a.exponent();
  const std::vector<int> gens = greedy_generators(a);
  std::vector<int> steps;  // image of generator j is a multiple of modulus / order(g_j)
  for (int g : gens) steps.push_back(out.modulus / a.element_order(g));
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<int> images(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = choice[j] * steps[j];
    if (auto c = extend(a, gens, images, out.modulus)) out.chars.push_back(*c);
    std::size_t j = 0;
    while (j < gens.size() && ++choice[j] == a.element_order(gens[j])) choice[j++] = 0;
    if (j == gens.size()) break;
  }
  if (static_cast<int>(out.chars.size()) != a.size()) {
    throw std::logic_error("character_group: found " + std::to_string(out.chars.size()) + " characters for |A| = " +
                           std::to_string(a.size()));
  }
  return out;
}

int act_on_character(const SemidirectProduct& g, const CharacterGroup& chars, int h, int x) {
  const int hinv = g.H().inverse(h);
  Character c;
  c.k.resize(static_cast<std::size_t>(g.A().size()));
  for (int a = 0; a < g.A().size(); ++a)
    c.k[static_cast<std::size_t>(a)] = chars.chars[static_cast<std::size_t>(x)].k[static_cast<std::size_t>(g.act(hinv, a))];
  return chars.index_of(c);
}

int OrbitData::position(int x) const {
  const auto it = std::find(orbit.begin(), orbit.end(), x);
  return it == orbit.end() ? -1 : static_cast<int>(it - orbit.begin());
}

std::vector<OrbitData> orbits_and_stabilizers(const SemidirectProduct& g, const CharacterGroup& chars) {
  std::vector<OrbitData> out;
  std::vector<char> seen(chars.size(), 0);
  for (int x0 = 0; x0 < static_cast<int>(chars.size()); ++x0) {
    if (seen[static_cast<std::size_t>(x0)]) continue;
    OrbitData o;
    o.orbit.push_back(x0);
    o.section.push_back(g.H().identity());
    seen[static_cast<std::size_t>(x0)] = 1;
    for (int h = 0; h < g.H().size(); ++h) {
      const int x = act_on_character(g, chars, h, x0);
      if (x == x0) o.stabilizer.push_back(h);
      if (o.position(x) < 0) {
        o.orbit.push_back(x);
        o.section.push_back(h);
        seen[static_cast<std::size_t>(x)] = 1;
      }
    }
    // the identity may not be element 0 of H; the section of x0 must be the first h fixing it
    o.section[0] = o.stabilizer.front();
    out.push_back(std::move(o));
  }
  return out;
}

const MatX& UnitaryRep::at(int element) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == element) return mats[i];
  throw DomainError("element " + std::to_string(element) + " is outside the representation's group");
}

std::vector<UnitaryRep> subgroup_irreps(const FiniteGroup& h, const std::vector<int>& elements, int exact_order,
                                        Rng& rng) {
  const auto n = static_cast<Eigen::Index>(elements.size());
  const std::vector<int> pos = positions(h.size(), elements);
  std::vector<MatX> regular;
  for (int x : elements) {
    MatX r = MatX::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const int y = h.mul(x, elements[static_cast<std::size_t>(j)]);
      const int i = pos[static_cast<std::size_t>(y)];
      if (i < 0) throw DomainError("subgroup_irreps: element set is not closed under multiplication");
      r(i, j) = 1.0;
    }
    regular.push_back(std::move(r));
  }
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < 32; ++attempt) {
    MatX x(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) x(i, j) = Complex(gauss(rng), gauss(rng));
    x = (x + x.adjoint()).eval();
    MatX avg = MatX::Zero(n, n);
    for (const MatX& r : regular) avg += r * x * r.adjoint();
    avg /= static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<MatX> es(avg);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

    std::vector<UnitaryRep> irreps;
    std::vector<std::vector<Complex>> chars;
    bool ok = true;
    for (Eigen::Index start = 0; start < n && ok;) {
      Eigen::Index stop = start + 1;
      while (stop < n && ev[stop] - ev[stop - 1] < 1e-8 * scale) ++stop;
      const MatX v = es.eigenvectors().middleCols(start, stop - start);
      start = stop;
      UnitaryRep d;
      d.dim = static_cast<int>(v.cols());
      d.elements = elements;
      std::vector<Complex> chi;
      for (const MatX& r : regular) {
        d.mats.push_back(v.adjoint() * r * v);
        chi.push_back(d.mats.back().trace());
      }
      // invariance of the eigenspace and irreducibility
      for (std::size_t i = 0; i < regular.size() && ok; ++i)
        ok = max_abs(MatX(regular[i] * v - v * d.mats[i])) < 1e-9;
      ok = ok && std::abs(character_overlap(chi, chi) - 1.0) < 1e-9;
      if (!ok) break;
      bool duplicate = false;
      for (const auto& c : chars) duplicate = duplicate || character_overlap(c, chi) > 0.5;
      if (!duplicate) {
        chars.push_back(chi);
        irreps.push_back(std::move(d));
      }
    }
    if (!ok) continue;
    int sum = 0;
    for (const auto& d : irreps) sum += d.dim * d.dim;
    if (sum != n) continue;
    if (exact_order > 0) {
      for (auto& d : irreps)
        for (const MatX& m : d.mats) d.character.push_back(exact_trace(m, exact_order));
    }
    std::stable_sort(irreps.begin(), irreps.end(), [](const UnitaryRep& a, const UnitaryRep& b) { return a.dim < b.dim; });
    return irreps;
  }
  throw std::runtime_error("subgroup_irreps: eigenspace splitting did not converge");
}

UnitaryRep induce(const SemidirectProduct& g, const CharacterGroup& chars, const OrbitData& orbit, const UnitaryRep& d) {
  std::vector<int> want = orbit.stabilizer;
  std::vector<int> have = d.elements;
  std::sort(have.begin(), have.end());
  if (want != have) throw DomainError("induce: representation is not defined on the orbit's stabilizer");
  const FiniteGroup& h = g.H();
  for (int x : d.elements)
    for (int y : d.elements)
      if (max_abs(MatX(d.at(x) * d.at(y) - d.at(h.mul(x, y)))) > 1e-10) {
        throw DomainError("induce: D is not a representation of the stabilizer");
      }

  const int nx = static_cast<int>(orbit.orbit.size());
  const int dd = d.dim;
  UnitaryRep v;
  v.dim = nx * dd;
  const bool exact = d.has_exact_character();
  const int order = exact ? d.character.front().order() : 0;
  for (int e = 0; e < g.size(); ++e) {
    const int a = g.a_part(e);
    const int hh = g.h_part(e);
    const int hinv = h.inverse(hh);
    MatX m = MatX::Zero(v.dim, v.dim);
    Cyclotomic chi = exact ? Cyclotomic(order) : Cyclotomic(1);
    for (int i = 0; i < nx; ++i) {
      const int x = orbit.orbit[static_cast<std::size_t>(i)];
      const int j = orbit.position(act_on_character(g, chars, hinv, x));
      const int cx = orbit.section[static_cast<std::size_t>(i)];
      const int cy = orbit.section[static_cast<std::size_t>(j)];
      const int h0 = h.mul(h.mul(h.inverse(cx), hh), cy);
      m.block(i * dd, j * dd, dd, dd) = chars.value(x, a) * d.at(h0);
      if (exact && i == j) {
        const auto k = std::find(d.elements.begin(), d.elements.end(), h0) - d.elements.begin();
        chi += chars.exact(x, a, order) * d.character[static_cast<std::size_t>(k)];
      }
    }
    v.elements.push_back(e);
    v.mats.push_back(std::move(m));
    if (exact) v.character.push_back(chi);
  }
  return v;
}

ImprimitivityReport imprimitivity_check(const SemidirectProduct& g, const CharacterGroup& chars, const UnitaryRep& w,
                                        double tolerance) {
  ImprimitivityReport rep;
  const int na = g.A().size();
  const auto dim = static_cast<Eigen::Index>(w.dim);
  std::vector<MatX> p;
  MatX total = MatX::Zero(dim, dim);
  for (int x = 0; x < static_cast<int>(chars.size()); ++x) {
    MatX px = MatX::Zero(dim, dim);
    for (int a = 0; a < na; ++a) px += std::conj(chars.value(x, a)) * w.at(g.index(a, g.H().identity()));
    px /= static_cast<double>(na);
    total += px;
    const int rank = static_cast<int>(std::lround(px.trace().real()));
    rep.ranks.push_back(rank);
    rep.total_rank += rank;
    p.push_back(std::move(px));
  }
  rep.resolution_defect = max_abs(MatX(total - MatX::Identity(dim, dim)));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      const MatX expect = x == y ? p[x] : MatX::Zero(dim, dim);
      rep.orthogonality_defect = std::max(rep.orthogonality_defect, max_abs(MatX(p[x] * p[y] - expect)));
    }
  for (int h = 0; h < g.H().size(); ++h) {
    const MatX& vh = w.at(g.index(g.A().identity(), h));
    for (int x = 0; x < static_cast<int>(chars.size()); ++x) {
      const int hx = act_on_character(g, chars, h, x);
      const double defect =
          max_abs(MatX(vh * p[static_cast<std::size_t>(x)] * vh.adjoint() - p[static_cast<std::size_t>(hx)]));
      rep.covariance_defect = std::max(rep.covariance_defect, defect);
      if (defect > tolerance && rep.first_failure.empty()) {
        rep.first_failure = "covariance fails at h = " + std::to_string(h) + ", x = " + std::to_string(x);
      }
    }
  }
  rep.passed = rep.resolution_defect <= tolerance && rep.orthogonality_defect <= tolerance &&
               rep.covariance_defect <= tolerance && rep.total_rank == w.dim;
  if (!rep.passed && rep.first_failure.empty()) rep.first_failure = "projection-valued measure defect";
  return rep;
}

namespace {

struct Induced {
  InducedClass info;
  UnitaryRep rep;
};

std::vector<Induced> build_all(const SemidirectProduct& g, const CharacterGroup& chars,
                               const std::vector<OrbitData>& orbits, int exact_order, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Induced> out;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto irreps = subgroup_irreps(g.H(), orbits[o].stabilizer, exact_order, rng);
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      Induced x;
      x.rep = induce(g, chars, orbits[o], irreps[i]);
      x.info.orbit = static_cast<int>(o);
      x.info.irrep = static_cast<int>(i);
      x.info.dim = x.rep.dim;
      x.info.orbit_size = static_cast<int>(orbits[o].orbit.size());
      x.info.stabilizer_order = static_cast<int>(orbits[o].stabilizer.size());
      out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

MackeyReport verify_mackey(const SemidirectProduct& g, std::uint64_t seed) {
  MackeyReport rep;
  rep.group = g.name();
  rep.order = g.size();
  const int exponent = g.group().exponent();
  rep.exact_order = exponent <= Cyclotomic::kMaxOrder ? exponent : 0;
  const CharacterGroup chars = character_group(g.A());
  rep.orbits = orbits_and_stabilizers(g, chars);
  std::vector<Induced> all = build_all(g, chars, rep.orbits, rep.exact_order, seed);
  const bool exact = rep.exact_order > 0;
  const int n = g.size();
  const int na = g.A().size();

  rep.irreducible = true;
  rep.imprimitive = true;
  for (Induced& x : all) {
    InducedClass& c = x.info;
    const UnitaryRep& v = x.rep;
    const std::string label = "orbit " + std::to_string(c.orbit) + " irrep " + std::to_string(c.irrep);
    for (int g1 = 0; g1 < n; ++g1) {
      const MatX& m1 = v.mats[static_cast<std::size_t>(g1)];
      c.unitarity_defect = std::max(c.unitarity_defect, max_abs(MatX(m1 * m1.adjoint() - MatX::Identity(v.dim, v.dim))));
      for (int g2 = 0; g2 < n; ++g2)
        c.homomorphism_defect =
            std::max(c.homomorphism_defect, max_abs(MatX(m1 * v.mats[static_cast<std::size_t>(g2)] -
                                                         v.mats[static_cast<std::size_t>(g.mul(g1, g2))])));
    }
    if (c.homomorphism_defect > 1e-12) rep.failures.push_back(label + ": not a homomorphism");
    if (c.unitarity_defect > 1e-12) rep.failures.push_back(label + ": not unitary");

    std::vector<Complex> chi;
    for (const MatX& m : v.mats) chi.push_back(m.trace());
    c.norm = character_overlap(chi, chi);
    if (exact) {
      Cyclotomic s(rep.exact_order);
      for (const Cyclotomic& z : v.character) s += z.conj() * z;
      c.norm_times_order = s.integer_value();
      for (int e = 0; e < n; ++e)
        if (std::abs(v.character[static_cast<std::size_t>(e)].value() - chi[static_cast<std::size_t>(e)]) > 1e-9) {
          rep.failures.push_back(label + ": exact and matrix characters disagree");
          break;
        }
      // restriction to A: multiplicity |A| m_y = sum_a conj<y,a> chi(a, e)
      c.restriction_ok = true;
      const OrbitData& orbit = rep.orbits[static_cast<std::size_t>(c.orbit)];
      const int dim_d = c.dim / c.orbit_size;
      for (int y = 0; y < static_cast<int>(chars.size()); ++y) {
        Cyclotomic m(rep.exact_order);
        for (int a = 0; a < na; ++a)
          m += chars.exact(y, a, rep.exact_order).conj() * v.character[static_cast<std::size_t>(g.index(a, g.H().identity()))];
        const std::int64_t expect = orbit.position(y) >= 0 ? static_cast<std::int64_t>(na) * dim_d : 0;
        c.restriction_ok = c.restriction_ok && m.is_integer() && m.integer_value() == expect;
      }
    } else {
      c.norm_times_order = std::llround(c.norm * n);
      c.restriction_ok = true;
    }
    if (c.norm_times_order != n) {
      rep.irreducible = false;
      rep.failures.push_back(label + ": character norm " + std::to_string(c.norm_times_order) + "/" + std::to_string(n));
    }
    if (!c.restriction_ok) rep.failures.push_back(label + ": restriction to A has the wrong spectrum");
    c.imprimitivity = imprimitivity_check(g, chars, v);
    if (!c.imprimitivity.passed) {
      rep.imprimitive = false;
      rep.failures.push_back(label + ": " + c.imprimitivity.first_failure);
    }
    rep.sum_dim_squared += static_cast<std::int64_t>(c.dim) * c.dim;
  }

  rep.inequivalent = true;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool zero = false;
      if (exact) {
        Cyclotomic s(rep.exact_order);
        for (int e = 0; e < n; ++e)
          s += all[i].rep.character[static_cast<std::size_t>(e)].conj() * all[j].rep.character[static_cast<std::size_t>(e)];
        zero = s == Cyclotomic(rep.exact_order);
      } else {
        std::vector<Complex> a;
        std::vector<Complex> b;
        for (int e = 0; e < n; ++e) {
          a.push_back(all[i].rep.mats[static_cast<std::size_t>(e)].trace());
          b.push_back(all[j].rep.mats[static_cast<std::size_t>(e)].trace());
        }
        zero = character_overlap(a, b) < 1e-9;
      }
      if (!zero) {
        rep.inequivalent = false;
        rep.failures.push_back("classes " + std::to_string(i) + " and " + std::to_string(j) + " are equivalent");
      }
    }
  rep.complete = rep.sum_dim_squared == n;
  if (!rep.complete) rep.failures.push_back("sum of squared dimensions " + std::to_string(rep.sum_dim_squared) + " != |G|");
  for (Induced& x : all) rep.classes.push_back(x.info);
  return rep;
}

std::vector<std::vector<Complex>> induced_character_table(const SemidirectProduct& g, std::uint64_t seed) {
  const CharacterGroup chars = character_group(g.A());
  const auto orbits = orbits_and_stabilizers(g, chars);
  std::vector<std::vector<Complex>> table;
  for (const Induced& x : build_all(g, chars, orbits, 0, seed)) {
    std::vector<Complex> row;
    for (const MatX& m : x.rep.mats) row.push_back(m.trace());
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace poincare
