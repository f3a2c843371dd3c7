#pragma once

#include <array>
#include <string>

#include "sepinv/rational.hpp"

namespace sepinv {

// Element of Q(sqrt2, sqrt5): a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational
// coordinates. Exactly the field needed to write down the binary polyhedral
// generators (sqrt2 for the octahedral one, sqrt5 for the icosian golden
// ratio).
struct QuadraticFieldScalar {
  std::array<Rational, 4> c{};  // 1, sqrt2, sqrt5, sqrt10

  QuadraticFieldScalar() = default;
  explicit QuadraticFieldScalar(Rational a) { c[0] = std::move(a); }
  QuadraticFieldScalar(Rational a, Rational b, Rational cc, Rational d)
      : c{std::move(a), std::move(b), std::move(cc), std::move(d)} {}

  bool is_zero() const;
  friend QuadraticFieldScalar operator+(const QuadraticFieldScalar& x, const QuadraticFieldScalar& y);
  friend QuadraticFieldScalar operator-(const QuadraticFieldScalar& x, const QuadraticFieldScalar& y);
  friend QuadraticFieldScalar operator*(const QuadraticFieldScalar& x, const QuadraticFieldScalar& y);
  QuadraticFieldScalar operator-() const;
  bool operator==(const QuadraticFieldScalar& o) const { return c == o.c; }
  bool operator!=(const QuadraticFieldScalar& o) const { return !(*this == o); }

  // Total order for deterministic dedup maps.
  bool operator<(const QuadraticFieldScalar& o) const;

  std::string to_string() const;
};

// Quaternion with QuadraticFieldScalar components (1, i, j, k basis).
struct Quaternion {
  std::array<QuadraticFieldScalar, 4> q{};

  static Quaternion one();
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  bool operator==(const Quaternion& o) const { return q == o.q; }
  bool operator<(const Quaternion& o) const;

  QuadraticFieldScalar norm() const;  // q * conj(q), real part
  std::string to_string() const;
};

}  // namespace sepinv
