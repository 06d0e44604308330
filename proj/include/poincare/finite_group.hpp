#ifndef POINCARE_FINITE_GROUP_HPP
#define POINCARE_FINITE_GROUP_HPP

#include <string>
#include <vector>

namespace poincare {

using Table = std::vector<std::vector<int>>;

/// A finite group given by its multiplication table (0-based element indices).
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates closure, identity, inverses and associativity (exhaustive for n <= 64, sampled above).
  static FiniteGroup from_table(Table table);
  static FiniteGroup cyclic(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int size() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity() const { return identity_; }
  const Table& table() const { return table_; }

  bool abelian() const;
  int element_order(int a) const;
  int exponent() const;
  /// Conjugacy classes, each sorted, ordered by smallest element (the identity class first).
  std::vector<std::vector<int>> conjugacy_classes() const;

 private:
  Table table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// G = A x| H with (a1, h1)(a2, h2) = (a1 + h1.a2, h1 h2); element (a, h) has index a + |A| h.
class SemidirectProduct {
 public:
  SemidirectProduct() = default;
  /// action[h][a] = h.a; validated to be a homomorphism H -> Aut(A). A must be abelian.
  SemidirectProduct(std::string name, FiniteGroup a, FiniteGroup h, Table action);

  const std::string& name() const { return name_; }
  const FiniteGroup& A() const { return a_; }
  const FiniteGroup& H() const { return h_; }
  int act(int h, int a) const { return action_[static_cast<std::size_t>(h)][static_cast<std::size_t>(a)]; }
  const Table& action() const { return action_; }

  int size() const { return a_.size() * h_.size(); }
  int index(int a, int h) const { return a + a_.size() * h; }
  int a_part(int g) const { return g % a_.size(); }
  int h_part(int g) const { return g / a_.size(); }
  int mul(int g1, int g2) const;
  const FiniteGroup& group() const { return g_; }

 private:
  std::string name_;
  FiniteGroup a_;
  FiniteGroup h_;
  Table action_;
  FiniteGroup g_;
};

/// Built-ins: "S3", "D4", "A4", "Z5:Z4", "Heis3", and the abelian "Z<n>", "Z<m>xZ<n>" (trivial H).
SemidirectProduct builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

}  // namespace poincare

#endif  // POINCARE_FINITE_GROUP_HPP
