#include "sepinv/quaternion.hpp"

namespace sepinv {

bool QuadraticFieldScalar::is_zero() const {
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
}

QuadraticFieldScalar operator+(const QuadraticFieldScalar& x, const QuadraticFieldScalar& y) {
  QuadraticFieldScalar r;
  for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
  return r;
}

QuadraticFieldScalar operator-(const QuadraticFieldScalar& x, const QuadraticFieldScalar& y) {
  QuadraticFieldScalar r;
  for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] - y.c[i];
  return r;
}

QuadraticFieldScalar QuadraticFieldScalar::operator-() const {
  QuadraticFieldScalar r;
  for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
  return r;
}

// Basis products: sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5,
// sqrt5*sqrt10 = 5*sqrt2, sqrt10^2 = 10.
QuadraticFieldScalar operator*(const QuadraticFieldScalar& x, const QuadraticFieldScalar& y) {
  const Rational& a0 = x.c[0];
  const Rational& a1 = x.c[1];
  const Rational& a2 = x.c[2];
  const Rational& a3 = x.c[3];
  const Rational& b0 = y.c[0];
  const Rational& b1 = y.c[1];
  const Rational& b2 = y.c[2];
  const Rational& b3 = y.c[3];
  QuadraticFieldScalar r;
  r.c[0] = a0 * b0 + Rational(2) * a1 * b1 + Rational(5) * a2 * b2 + Rational(10) * a3 * b3;
  r.c[1] = a0 * b1 + a1 * b0 + Rational(5) * (a2 * b3 + a3 * b2);
  r.c[2] = a0 * b2 + a2 * b0 + Rational(2) * (a1 * b3 + a3 * b1);
  r.c[3] = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
  return r;
}

bool QuadraticFieldScalar::operator<(const QuadraticFieldScalar& o) const {
  for (int i = 0; i < 4; ++i) {
    int cmp = c[i].compare(o.c[i]);
    if (cmp != 0) return cmp < 0;
  }
  return false;
}

std::string QuadraticFieldScalar::to_string() const {
  static const char* kBasis[4] = {"", "r2", "r5", "r10"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c[i].is_zero()) continue;
    std::string term = c[i].to_string();
    if (i > 0) {
      if (term == "1")
        term = kBasis[i];
      else if (term == "-1")
        term = std::string("-") + kBasis[i];
      else
        term += kBasis[i];
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Quaternion Quaternion::one() {
  Quaternion r;
  r.q[0] = QuadraticFieldScalar(Rational(1));
  return r;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  const auto& a = x.q;
  const auto& b = y.q;
  Quaternion r;
  r.q[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  r.q[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  r.q[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  r.q[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
  return r;
}

bool Quaternion::operator<(const Quaternion& o) const {
  for (int i = 0; i < 4; ++i) {
    if (q[i] != o.q[i]) return q[i] < o.q[i];
  }
  return false;
}

QuadraticFieldScalar Quaternion::norm() const {
  QuadraticFieldScalar n;
  for (int i = 0; i < 4; ++i) n = n + q[i] * q[i];
  return n;
}

std::string Quaternion::to_string() const {
  static const char* kBasis[4] = {"", "i", "j", "k"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (q[i].is_zero()) continue;
    std::string coeff = q[i].to_string();
    bool needs_parens = coeff.find('+') != std::string::npos || coeff.find('-', 1) != std::string::npos;
    std::string term;
    if (i == 0) {
      term = coeff;
    } else if (coeff == "1") {
      term = kBasis[i];
    } else if (coeff == "-1") {
      term = std::string("-") + kBasis[i];
    } else if (needs_parens) {
      term = "(" + coeff + ")" + kBasis[i];
    } else {
      term = coeff + kBasis[i];
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace sepinv
