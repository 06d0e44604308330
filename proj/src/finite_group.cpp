#include "poincare/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>

#include "poincare/minkowski.hpp"

namespace poincare {

FiniteGroup FiniteGroup::from_table(Table table) {
  const auto n = table.size();
  if (n == 0) throw DomainError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw DomainError("group table is not square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw DomainError("group table entry out of range");
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  const int size = static_cast<int>(n);
  g.identity_ = -1;
  for (int e = 0; e < size && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < size && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw DomainError("group table has no identity");
  g.inverse_.assign(n, -1);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b)
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) g.inverse_[static_cast<std::size_t>(a)] = b;
    if (g.inverse_[static_cast<std::size_t>(a)] < 0) {
      throw DomainError("element " + std::to_string(a) + " has no inverse");
    }
  }
  auto assoc = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      throw DomainError("group table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                        ", " + std::to_string(c) + ")");
    }
  };
  if (size <= 64) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        for (int c = 0; c < size; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, size - 1);
    for (int t = 0; t < 200000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.size();
  const int n = na * b.size();
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  return from_table(std::move(t));
}

bool FiniteGroup::abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < size(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> seen(static_cast<std::size_t>(size()), 0);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < size(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    std::vector<int> cls;
    for (int g = 0; g < size(); ++g) {
      const int c = mul(mul(g, a), inverse(g));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(cls);
  }
  // identity class first
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return (x.front() == identity_) > (y.front() == identity_);
  });
  return out;
}

SemidirectProduct::SemidirectProduct(std::string name, FiniteGroup a, FiniteGroup h, Table action)
    : name_(std::move(name)), a_(std::move(a)), h_(std::move(h)), action_(std::move(action)) {
  if (!a_.abelian()) throw DomainError("normal factor A must be abelian");
  const auto na = static_cast<std::size_t>(a_.size());
  const auto nh = static_cast<std::size_t>(h_.size());
  if (action_.size() != nh) throw DomainError("action table needs one row per element of H");
  for (std::size_t h = 0; h < nh; ++h) {
    if (action_[h].size() != na) throw DomainError("action row " + std::to_string(h) + " has wrong length");
    std::vector<int> sorted = action_[h];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < na; ++i)
      if (sorted[i] != static_cast<int>(i)) throw DomainError("action of h = " + std::to_string(h) + " is not a bijection");
    for (int x = 0; x < a_.size(); ++x)
      for (int y = 0; y < a_.size(); ++y)
        if (act(static_cast<int>(h), a_.mul(x, y)) != a_.mul(act(static_cast<int>(h), x), act(static_cast<int>(h), y))) {
          throw DomainError("action of h = " + std::to_string(h) + " is not an automorphism");
        }
  }
  for (int h1 = 0; h1 < h_.size(); ++h1)
    for (int h2 = 0; h2 < h_.size(); ++h2)
      for (int x = 0; x < a_.size(); ++x)
        if (act(h_.mul(h1, h2), x) != act(h1, act(h2, x))) throw DomainError("action is not a homomorphism H -> Aut(A)");
  for (int x = 0; x < a_.size(); ++x)
    if (act(h_.identity(), x) != x) throw DomainError("identity of H acts nontrivially");

  const int n = size();
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      const int a = a_.mul(a_part(g1), act(h_part(g1), a_part(g2)));
      t[static_cast<std::size_t>(g1)][static_cast<std::size_t>(g2)] = index(a, h_.mul(h_part(g1), h_part(g2)));
    }
  g_ = FiniteGroup::from_table(std::move(t));
}

int SemidirectProduct::mul(int g1, int g2) const { return g_.mul(g1, g2); }

namespace {

Table affine_action(int n_a, int n_h, int multiplier) {
  // h.a = multiplier^h a mod n_a
  Table t(static_cast<std::size_t>(n_h), std::vector<int>(static_cast<std::size_t>(n_a)));
  int m = 1;
  for (int h = 0; h < n_h; ++h) {
    for (int a = 0; a < n_a; ++a) t[static_cast<std::size_t>(h)][static_cast<std::size_t>(a)] = (m * a) % n_a;
    m = (m * multiplier) % n_a;
  }
  return t;
}

}  // namespace

SemidirectProduct builtin_group(const std::string& name) {
  if (name == "S3") return {name, FiniteGroup::cyclic(3), FiniteGroup::cyclic(2), affine_action(3, 2, 2)};
  if (name == "D4") return {name, FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), affine_action(4, 2, 3)};
  if (name == "Z5:Z4") return {name, FiniteGroup::cyclic(5), FiniteGroup::cyclic(4), affine_action(5, 4, 2)};
  if (name == "A4") {
    // Z2 x Z2 indexed x + 2y; the generator of Z3 cycles the three involutions
    const FiniteGroup v = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    return {name, v, FiniteGroup::cyclic(3), Table{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
  }
  if (name == "Heis3") {
    // h.(x, y) = (x + h y, y) on Z3 x Z3 indexed x + 3y
    const FiniteGroup a = FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
    Table t(3, std::vector<int>(9));
    for (int h = 0; h < 3; ++h)
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) t[static_cast<std::size_t>(h)][static_cast<std::size_t>(x + 3 * y)] = (x + h * y) % 3 + 3 * y;
    return {name, a, FiniteGroup::cyclic(3), t};
  }
  static const std::regex cyclic(R"(Z(\d+))");
  static const std::regex product(R"(Z(\d+)xZ(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, product)) {
    const FiniteGroup a = FiniteGroup::direct_product(FiniteGroup::cyclic(std::stoi(m[1])), FiniteGroup::cyclic(std::stoi(m[2])));
    std::vector<int> id(static_cast<std::size_t>(a.size()));
    std::iota(id.begin(), id.end(), 0);
    return {name, a, FiniteGroup::cyclic(1), Table{id}};
  }
  if (std::regex_match(name, m, cyclic)) {
    const int n = std::stoi(m[1]);
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return {name, FiniteGroup::cyclic(n), FiniteGroup::cyclic(1), Table{id}};
  }
  throw DomainError("unknown builtin group '" + name + "'");
}

std::vector<std::string> builtin_group_names() { return {"S3", "D4", "A4", "Z5:Z4", "Heis3"}; }

}  // namespace poincare
