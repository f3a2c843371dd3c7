#include "sepinv/polynomial.hpp"

#include <stdexcept>

namespace sepinv {

namespace {
const Rational kZero(0);
}

Poly Poly::constant(Rational v) { return Poly(std::vector<Rational>{std::move(v)}); }

Poly Poly::monomial(int degree, Rational coeff) {
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coeff);
  return Poly(std::move(c));
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return Poly(std::move(c));
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long long>(i));
  return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quot(a.degree() >= db ? a.degree() - db + 1 : 0);
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    if (rem[d].is_zero()) continue;
    Rational factor = rem[d] / b.lead();
    quot[d - db] = factor;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= factor * b.c_[i];
  }
  q = Poly(std::move(quot));
  r = Poly(std::move(rem));
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("Poly::divexact: inexact division");
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lead());
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();  // keeps coefficient growth in check
  }
  return x.monic();
}

Poly Poly::pow(int e) const {
  Poly r = Poly::constant(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// Yun's algorithm, characteristic zero.
std::vector<Poly> squarefree_decomposition(const Poly& u) {
  if (u.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<Poly> factors;
  Poly f = u.monic();
  if (f.degree() == 0) return factors;
  Poly fp = f.derivative();
  Poly g = Poly::gcd(f, fp);
  Poly w = Poly::divexact(f, g);
  Poly y = Poly::divexact(fp, g);
  while (w.degree() > 0) {
    Poly z = y - w.derivative();
    Poly fac = Poly::gcd(w, z);
    factors.push_back(fac.monic());
    w = Poly::divexact(w, fac);
    y = Poly::divexact(z, fac);
  }
  return factors;
}

}  // namespace sepinv
