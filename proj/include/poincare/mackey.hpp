#ifndef POINCARE_MACKEY_HPP
#define POINCARE_MACKEY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "poincare/cyclotomic.hpp"
#include "poincare/finite_group.hpp"
#include "poincare/minkowski.hpp"

namespace poincare {

/// <x, a> = exp(2 pi i k[a] / modulus).
struct Character {
  std::vector<int> k;
  friend bool operator==(const Character&, const Character&) = default;
};

struct CharacterGroup {
  int modulus = 1;  // exponent of A
  std::vector<Character> chars;

  std::size_t size() const { return chars.size(); }
  Complex value(int x, int a) const;
  /// <x, a> in Z[zeta_order]; `order` must be a multiple of `modulus`.
  Cyclotomic exact(int x, int a, int order) const;
  int index_of(const Character& c) const;
  /// Index of the trivial character.
  int trivial() const;
};

/// All homomorphisms A -> U(1), found by assigning images to a greedy generating set and
/// keeping the consistent assignments. Throws DomainError if A is not abelian.
CharacterGroup character_group(const FiniteGroup& a);

/// Character index of h.x, where <h.x, a> = <x, h^{-1}.a>.
int act_on_character(const SemidirectProduct& g, const CharacterGroup& chars, int h, int x);

struct OrbitData {
  std::vector<int> orbit;       // character indices; orbit[0] is the base point x0
  std::vector<int> stabilizer;  // elements of H fixing x0, increasing
  std::vector<int> section;     // section[i] = first h (table order) with h.x0 = orbit[i]

  int base() const { return orbit.front(); }
  int position(int x) const;  // index of x in `orbit`, or -1
};

/// H-orbits on the character group, ordered by smallest character index.
std::vector<OrbitData> orbits_and_stabilizers(const SemidirectProduct& g, const CharacterGroup& chars);

/// Unitary matrices indexed by group element (for a subgroup: by position in `elements`).
struct UnitaryRep {
  int dim = 0;
  std::vector<int> elements;  // group element for each matrix
  std::vector<MatX> mats;
  std::vector<Cyclotomic> character;  // exact traces, when available

  const MatX& at(int element) const;
  bool has_exact_character() const { return !character.empty(); }
};

/// Irreducible unitary representations of the subgroup `elements` of `h`, by splitting the
/// regular representation with the eigenspaces of a group-averaged random hermitian operator.
/// Traces are rounded to sums of `exact_order`-th roots of unity when exact_order > 0.
std::vector<UnitaryRep> subgroup_irreps(const FiniteGroup& h, const std::vector<int>& elements, int exact_order,
                                        Rng& rng);

/// (V_{ah} psi)(x) = <x,a> D(c(x)^{-1} h c(h^{-1}.x)) psi(h^{-1}.x) as block matrices over the orbit.
/// Throws DomainError if `d` is not a representation of the orbit's stabilizer.
UnitaryRep induce(const SemidirectProduct& g, const CharacterGroup& chars, const OrbitData& orbit,
                  const UnitaryRep& d);

struct ImprimitivityReport {
  double resolution_defect = 0.0;     // |sum_x P(x) - 1|
  double orthogonality_defect = 0.0;  // |P(x) P(y) - delta_xy P(x)|
  double covariance_defect = 0.0;     // |V_h P(x) V_h^{-1} - P(h.x)|
  int total_rank = 0;
  std::vector<int> ranks;  // per character
  std::string first_failure;
  bool passed = false;
};

/// Spectral projections P({x}) = |A|^{-1} sum_a conj<x,a> W(a) of W restricted to A,
/// and the covariance V_h P({x}) V_h^{-1} = P({h.x}).
ImprimitivityReport imprimitivity_check(const SemidirectProduct& g, const CharacterGroup& chars,
                                        const UnitaryRep& w, double tolerance = 1e-12);

struct InducedClass {
  int orbit = 0;
  int irrep = 0;
  int dim = 0;
  int orbit_size = 0;
  int stabilizer_order = 0;
  std::int64_t norm_times_order = 0;  // |G| <chi, chi>, exact
  double norm = 0.0;                  // <chi, chi> from the matrices
  double homomorphism_defect = 0.0;
  double unitarity_defect = 0.0;
  bool restriction_ok = false;  // V|_A = dim D copies of each orbit character
  ImprimitivityReport imprimitivity;
};

struct MackeyReport {
  std::string group;
  int order = 0;
  int exact_order = 0;  // cyclotomic order used for characters; 0 when floating point only
  std::vector<OrbitData> orbits;
  std::vector<InducedClass> classes;
  std::int64_t sum_dim_squared = 0;
  bool irreducible = false;
  bool inequivalent = false;
  bool complete = false;
  bool imprimitive = false;
  std::vector<std::string> failures;

  bool passed() const { return irreducible && inequivalent && complete && imprimitive && failures.empty(); }
};

MackeyReport verify_mackey(const SemidirectProduct& g, std::uint64_t seed = 1);

/// Characters of all induced irreps (row per class, column per group element), complex-valued.
std::vector<std::vector<Complex>> induced_character_table(const SemidirectProduct& g, std::uint64_t seed = 1);

}  // namespace poincare

#endif  // POINCARE_MACKEY_HPP
