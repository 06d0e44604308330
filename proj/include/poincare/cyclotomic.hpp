#ifndef POINCARE_CYCLOTOMIC_HPP
#define POINCARE_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace poincare {

/// Exact element of Z[zeta_N], stored as an integer polynomial in zeta_N reduced
/// modulo the cyclotomic polynomial Phi_N (degree phi(N)).
class Cyclotomic {
 public:
  static constexpr int kMaxOrder = 24;

  explicit Cyclotomic(int order);  // zero
  static Cyclotomic integer(int order, std::int64_t value);
  static Cyclotomic root(int order, int k);  // zeta_N^k

  int order() const { return order_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  bool is_integer() const;
  std::int64_t integer_value() const;  // requires is_integer()
  std::complex<double> value() const;
  std::string str() const;

 private:
  void reduce(std::vector<std::int64_t> raw);

  int order_;
  std::vector<std::int64_t> c_;
};

/// Integer coefficients of Phi_N, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

}  // namespace poincare

#endif  // POINCARE_CYCLOTOMIC_HPP
