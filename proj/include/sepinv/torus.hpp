#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepinv/gf.hpp"
#include "sepinv/polynomial.hpp"
#include "sepinv/rational.hpp"

namespace sepinv {

// Diagonal torus action on copies of k^copy_dim: coordinate j of every copy
// carries the same weight column, so the matrix is stored as one rank x
// copy_dim block plus the copy count. Global coordinate index is copy-major:
// coord = copy * copy_dim + j.
struct WeightMatrix {
  int rank = 0;
  int copy_dim = 0;
  int copies = 0;
  std::vector<long long> base;  // rank x copy_dim

  WeightMatrix() = default;
  WeightMatrix(int r, int n, int c, std::vector<long long> b);

  int coords() const { return copy_dim * copies; }
  long long weight(int row, int coord) const { return base[row * copy_dim + coord % copy_dim]; }
};

// Weights of the sharpness family: x_1 scales by the product of all torus
// coordinates, x_j (j >= 2) by alpha_{j-1}^(-band). band = 2 in
// characteristic != 2, band = 3 for the characteristic-2 variant.
WeightMatrix sharpness_weights(int n, int copies, int band = 2);

struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  bool operator==(const Monomial& o) const { return exponents == o.exponents; }
  std::string to_string(int copy_dim) const;  // e.g. "x(1)_1 x(3)_2^2"
};

// Graded-lex: total degree first, then elementwise lexicographic comparison
// of the exponent vectors.
bool monomial_less(const Monomial& a, const Monomial& b);

// Kernel-lattice membership: the weight matrix annihilates the exponents.
bool is_invariant(const WeightMatrix& w, const Monomial& m);

// Total degree per coordinate index across copies.
std::vector<long long> multidegree(const WeightMatrix& w, const Monomial& m);

// All invariant monomials of total degree <= degree_cap whose support
// touches only the allowed copies, sorted graded-lex. An absent support
// means every copy; an empty set admits only the constant monomial.
// Branch-and-bound over exponents with per-row weight interval pruning.
using CopySupport = std::optional<std::vector<int>>;
std::vector<Monomial> invariant_monomials(const WeightMatrix& w, int degree_cap,
                                          const CopySupport& support = std::nullopt);

// --- exact evaluation backends -------------------------------------------

// Q(omega) with omega a primitive cube root of unity, stored as the residue
// a + b*t modulo the cyclotomic polynomial t^2 + t + 1 (so omega^2 reduces
// to -1 - omega).
struct QOmega {
  Rational a, b;

  QOmega() = default;
  QOmega(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  static QOmega omega() { return QOmega(Rational(0), Rational(1)); }

  bool operator==(const QOmega& o) const { return a == o.a && b == o.b; }
  friend QOmega operator+(const QOmega& x, const QOmega& y) { return QOmega(x.a + y.a, x.b + y.b); }
  friend QOmega operator*(const QOmega& x, const QOmega& y) {
    return QOmega(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
  }
};

struct GfPoint {
  const Gf* field = nullptr;
  std::vector<int> coords;
};

Rational eval_monomial(const Monomial& m, std::span<const Rational> point);
QOmega eval_monomial(const Monomial& m, std::span<const QOmega> point);
int eval_monomial(const Monomial& m, const GfPoint& point);

// First invariant monomial (graded-lex, within cap and support) evaluating
// differently on the two points, if any.
std::optional<Monomial> separates(const WeightMatrix& w, std::span<const Rational> v,
                                  std::span<const Rational> v_prime, int degree_cap,
                                  const CopySupport& support = std::nullopt);
std::optional<Monomial> separates(const WeightMatrix& w, std::span<const QOmega> v,
                                  std::span<const QOmega> v_prime, int degree_cap,
                                  const CopySupport& support = std::nullopt);
std::optional<Monomial> separates(const WeightMatrix& w, const GfPoint& v, const GfPoint& v_prime,
                                  int degree_cap, const CopySupport& support = std::nullopt);

// --- scripted verifications ----------------------------------------------

struct SharpnessReport {
  int n = 0;
  int degree_cap = 0;
  std::optional<Monomial> full_support_monomial;  // must exist
  bool restricted_all_fail = false;               // no n-copy support separates
  bool ok = false;
};

// The rank n-1 torus on n+1 copies of k^n with v = (-e1, e1, e2, ..., en)
// and v' = (e1, e1, e2, ..., en) over Q: separated with full support,
// inseparable on every n-copy support up to the degree cap.
SharpnessReport sharpness_check(int n, int degree_cap = 12);

// Characteristic-2 variant over GF(4) with the -3 weight band and
// v = (omega e1, e1, ..., en), omega a primitive cube root of unity.
SharpnessReport char2_check(int n, int degree_cap = 12);

struct SpanLemmaReport {
  int trials = 0;
  int separable_pairs = 0;
  int disagreements = 0;  // must stay 0
  std::uint64_t seed = 0;
};

// Randomized property: recombining (v_i + v_i') by an invertible integer
// matrix preserves monomial separability within the cap (full support).
SpanLemmaReport span_data_respects_separation(const WeightMatrix& w, int trials, std::uint64_t seed,
                                              int degree_cap = 8);

}  // namespace sepinv
