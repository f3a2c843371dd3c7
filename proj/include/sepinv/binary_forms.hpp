#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepinv/polynomial.hpp"

namespace sepinv {

// Homogeneous binary form of degree d over the rationals:
// sum c_i x^i y^(d-i), stored as c_0..c_d. The zero form of each degree is
// allowed.
struct BinaryForm {
  int degree = 0;
  std::vector<Rational> coeffs;  // size degree+1

  BinaryForm() : coeffs(1) {}
  BinaryForm(int d, std::vector<Rational> c);

  static BinaryForm zero(int d);
  static BinaryForm linear(Rational cx, Rational cy);  // cx*x + cy*y

  bool is_zero() const;
  bool operator==(const BinaryForm& o) const { return degree == o.degree && coeffs == o.coeffs; }

  // u(t) = v(t, 1)
  Poly dehomogenize() const;
  static BinaryForm homogenize(const Poly& u, int degree);

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  BinaryForm operator*(const Rational& s) const;
  BinaryForm pow(int e) const;

  // x -> a x + b y, y -> c x + d y.
  BinaryForm substitute(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const;

  std::string to_string() const;
};

// Root-multiplicity strata of a non-zero form: multiplicity of y (the root
// at infinity of the dehomogenization) plus, per finite multiplicity e, the
// degree of the squarefree factor carrying exactly that multiplicity.
// Root coordinates are never computed.
struct MultiplicityProfile {
  int infinity_mult = 0;
  std::vector<std::pair<int, int>> finite;  // (multiplicity, stratum degree), ascending multiplicity

  int max_multiplicity() const;
};

MultiplicityProfile multiplicity_profile(const BinaryForm& v);

// Some root (finite or at infinity) of multiplicity >= threshold?
bool has_root_mult_ge(const BinaryForm& v, const Rational& threshold);

// A common root of multiplicity >= threshold across every non-zero member?
// Zero forms are transparent (every linear form divides them); rejects
// all-zero tuples.
bool common_root_mult_ge(std::span<const BinaryForm> vs, const Rational& threshold);

// v = c * q^(d/2) with q a squarefree quadratic form (two independent linear
// factors): returns (c, q) with q normalized to leading coefficient 1.
std::optional<std::pair<Rational, BinaryForm>> is_balanced_square(const BinaryForm& v);

enum class TorusLimitKind { NoLimit, Zero, Balanced };

struct TorusLimit {
  TorusLimitKind kind = TorusLimitKind::NoLimit;
  std::optional<BinaryForm> value;  // set for Balanced
};

// Behaviour of v under the one-parameter scaling that contracts l and
// expands m: the limit exists iff mult_l(v) >= d/2; above d/2 it is zero, at
// exactly d/2 it is a non-zero multiple of (l m)^(d/2). l, m must be
// independent linear forms.
TorusLimit limit_along_torus(const BinaryForm& v, const BinaryForm& l, const BinaryForm& m);

enum class OrbitFlagReason { NO_COMMON_HIGH_ROOT, COMMON_HIGH_ROOT, ALL_ZERO };

struct OrbitFlags {
  bool closed_maximal_sufficient = false;  // sufficiency only, never a negative certificate
  OrbitFlagReason reason = OrbitFlagReason::ALL_ZERO;
};

OrbitFlags orbit_flags(std::span<const BinaryForm> vs);

enum class CaseTag { I, II, III, IV, V, VI, TRIPLE_FRAME, ALL_ZERO };
const char* to_string(CaseTag t);

// Structural label of a tuple following the closed-orbit case analysis:
//   I   some non-zero component has no root of multiplicity >= d/2
//   II  every non-zero component has one, but some pair shares none
//   III a common linear form of multiplicity >= floor(d/2)+1 divides all
//   IV  some non-zero component is not a balanced square
//   V   all of the form l^(d/2) l_i^(d/2) with >= 2 independent l_i
//   VI  all scalar multiples of a single balanced square
//   TRIPLE_FRAME components span multiples of (l1 l2), (l1 l3), (l2 l3)
//                raised to the d/2
CaseTag case_classify(std::span<const BinaryForm> vs);

// Tuple of forms of one common degree (validates the shared degree).
struct FormTuple {
  int degree = 0;
  std::vector<BinaryForm> forms;

  FormTuple(int d, std::vector<BinaryForm> fs);
};

}  // namespace sepinv
