#pragma once

#include <vector>

#include "sepinv/rational.hpp"

namespace sepinv {

// Dense univariate polynomial over the rationals. Coefficient i multiplies
// t^i; the zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Rational v);
  static Poly monomial(int degree, Rational coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const;
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rational& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative() const;
  Rational eval(const Rational& x) const;

  // Euclidean division; b must be non-zero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly divexact(const Poly& a, const Poly& b);

  // Monic gcd (1 for coprime inputs, 0 iff both inputs are 0).
  static Poly gcd(const Poly& a, const Poly& b);

  Poly monic() const;
  Poly pow(int e) const;

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

// Squarefree decomposition (Yun): returns factors f_1, f_2, ... with
// u = lead * prod f_e^e, each f_e monic squarefree, pairwise coprime.
// Index 0 of the result holds f_1.
std::vector<Poly> squarefree_decomposition(const Poly& u);

}  // namespace sepinv
