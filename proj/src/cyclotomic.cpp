#include "poincare/cyclotomic.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "poincare/minkowski.hpp"

namespace poincare {

namespace {

using Poly = std::vector<std::int64_t>;

// exact division of monic integer polynomials
Poly divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t lead = num[i];
    q[i - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  return q;
}

void check_order(int n) {
  if (n < 1 || n > Cyclotomic::kMaxOrder) {
    throw DomainError("cyclotomic order " + std::to_string(n) + " outside 1.." +
                      std::to_string(Cyclotomic::kMaxOrder));
  }
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  check_order(n);
  static const std::array<Poly, Cyclotomic::kMaxOrder + 1> table = [] {
    std::array<Poly, Cyclotomic::kMaxOrder + 1> t;
    for (int m = 1; m <= Cyclotomic::kMaxOrder; ++m) {
      Poly p(static_cast<std::size_t>(m) + 1, 0);
      p[0] = -1;
      p[static_cast<std::size_t>(m)] = 1;
      for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide(p, t[static_cast<std::size_t>(d)]);
      t[static_cast<std::size_t>(m)] = p;
    }
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  check_order(order);
  c_.assign(cyclotomic_polynomial(order).size() - 1, 0);
}

Cyclotomic Cyclotomic::integer(int order, std::int64_t value) {
  Cyclotomic z(order);
  z.c_[0] = value;
  return z;
}

Cyclotomic Cyclotomic::root(int order, int k) {
  Cyclotomic z(order);
  Poly raw(static_cast<std::size_t>(order), 0);
  raw[static_cast<std::size_t>(((k % order) + order) % order)] = 1;
  z.reduce(std::move(raw));
  return z;
}

void Cyclotomic::reduce(Poly raw) {
  const Poly& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > deg;) {
    const std::int64_t lead = raw[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= lead * phi[j];
  }
  raw.resize(deg, 0);
  c_ = std::move(raw);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) throw DomainError("cyclotomic orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.order_ != order_) throw DomainError("cyclotomic orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) throw DomainError("cyclotomic orders differ");
  Poly raw(a.c_.size() + b.c_.size(), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) raw[i + j] += a.c_[i] * b.c_[j];
  Cyclotomic out(a.order_);
  out.reduce(std::move(raw));
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  Poly raw(static_cast<std::size_t>(order_), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) raw[(static_cast<std::size_t>(order_) - i) % static_cast<std::size_t>(order_)] += c_[i];
  Cyclotomic out(order_);
  out.reduce(std::move(raw));
  return out;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::int64_t Cyclotomic::integer_value() const {
  if (!is_integer()) throw DomainError("cyclotomic value is not an integer: " + str());
  return c_.empty() ? 0 : c_[0];
}

std::complex<double> Cyclotomic::value() const {
  std::complex<double> z = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    z += static_cast<double>(c_[i]) * std::polar(1.0, 2.0 * M_PI * static_cast<double>(i) / order_);
  return z;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (any) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    const std::int64_t a = std::abs(c_[i]);
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z" << order_ << "^" << i;
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace poincare
