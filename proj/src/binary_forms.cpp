#include "sepinv/binary_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepinv {

BinaryForm::BinaryForm(int d, std::vector<Rational> c) : degree(d), coeffs(std::move(c)) {
  if (d < 0) throw std::invalid_argument("BinaryForm: negative degree");
  if (coeffs.size() != static_cast<std::size_t>(d) + 1)
    throw std::invalid_argument("BinaryForm: need exactly degree+1 coefficients");
}

BinaryForm BinaryForm::zero(int d) { return BinaryForm(d, std::vector<Rational>(d + 1)); }

BinaryForm BinaryForm::linear(Rational cx, Rational cy) {
  return BinaryForm(1, {std::move(cy), std::move(cx)});
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
}

Poly BinaryForm::dehomogenize() const { return Poly(coeffs); }

BinaryForm BinaryForm::homogenize(const Poly& u, int degree) {
  if (u.degree() > degree) throw std::invalid_argument("homogenize: polynomial degree too large");
  std::vector<Rational> c(degree + 1);
  for (int i = 0; i <= u.degree(); ++i) c[i] = u.coeff(i);
  return BinaryForm(degree, std::move(c));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Rational> c(a.degree + b.degree + 1);
  for (int i = 0; i <= a.degree; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; j <= b.degree; ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return BinaryForm(a.degree + b.degree, std::move(c));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree != b.degree) throw std::invalid_argument("BinaryForm: degree mismatch in sum");
  std::vector<Rational> c(a.degree + 1);
  for (int i = 0; i <= a.degree; ++i) c[i] = a.coeffs[i] + b.coeffs[i];
  return BinaryForm(a.degree, std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + b * Rational(-1); }

BinaryForm BinaryForm::operator*(const Rational& s) const {
  std::vector<Rational> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] * s;
  return BinaryForm(degree, std::move(c));
}

BinaryForm BinaryForm::pow(int e) const {
  BinaryForm r(0, {Rational(1)});
  BinaryForm base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

BinaryForm BinaryForm::substitute(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) const {
  BinaryForm xi = BinaryForm::linear(a, b);
  BinaryForm eta = BinaryForm::linear(c, d);
  BinaryForm out = BinaryForm::zero(degree);
  for (int i = 0; i <= degree; ++i) {
    if (coeffs[i].is_zero()) continue;
    out = out + (xi.pow(i) * eta.pow(degree - i)) * coeffs[i];
  }
  return out;
}

std::string BinaryForm::to_string() const {
  std::string out;
  for (int i = degree; i >= 0; --i) {
    if (coeffs[i].is_zero()) continue;
    std::string term = coeffs[i].to_string();
    int ypow = degree - i;
    if (i > 0) term += " x" + (i > 1 ? "^" + std::to_string(i) : "");
    if (ypow > 0) term += " y" + (ypow > 1 ? "^" + std::to_string(ypow) : "");
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

int MultiplicityProfile::max_multiplicity() const {
  int m = infinity_mult;
  for (const auto& [e, deg] : finite) m = std::max(m, e);
  return m;
}

MultiplicityProfile multiplicity_profile(const BinaryForm& v) {
  if (v.is_zero()) throw std::invalid_argument("multiplicity_profile: zero form");
  Poly u = v.dehomogenize();
  MultiplicityProfile p;
  p.infinity_mult = v.degree - u.degree();
  std::vector<Poly> factors = squarefree_decomposition(u);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() >= 1)
      p.finite.emplace_back(static_cast<int>(i) + 1, factors[i].degree());
  }
  return p;
}

bool has_root_mult_ge(const BinaryForm& v, const Rational& threshold) {
  if (v.is_zero()) throw std::invalid_argument("has_root_mult_ge: zero form");
  MultiplicityProfile p = multiplicity_profile(v);
  if (p.infinity_mult >= 1 && Rational(p.infinity_mult) >= threshold) return true;
  for (const auto& [e, deg] : p.finite)
    if (Rational(e) >= threshold) return true;
  return false;
}

namespace {

// gcd of u with its first k-1 derivatives: the roots of the result are
// exactly the roots of u of multiplicity >= k.
Poly high_multiplicity_part(const Poly& u, int k) {
  Poly g = u.monic();
  Poly der = u;
  for (int i = 1; i < k && g.degree() > 0; ++i) {
    der = der.derivative();
    g = Poly::gcd(g, der);
  }
  return g;
}

}  // namespace

bool common_root_mult_ge(std::span<const BinaryForm> vs, const Rational& threshold) {
  if (threshold <= Rational(0)) throw std::invalid_argument("common_root_mult_ge: threshold must be positive");
  int k = static_cast<int>(threshold.ceil().to_int64());
  bool any_nonzero = false;
  bool all_infinity = true;
  Poly common;
  bool first = true;
  for (const BinaryForm& v : vs) {
    if (v.is_zero()) continue;  // zero forms never block a common root
    any_nonzero = true;
    Poly u = v.dehomogenize();
    if (Rational(v.degree - u.degree()) < threshold) all_infinity = false;
    Poly h = high_multiplicity_part(u, k);
    common = first ? h : Poly::gcd(common, h);
    first = false;
    if (common.degree() < 1 && !all_infinity) return false;  // early out
  }
  if (!any_nonzero) throw std::invalid_argument("common_root_mult_ge: all forms are zero");
  return common.degree() >= 1 || all_infinity;
}

std::optional<std::pair<Rational, BinaryForm>> is_balanced_square(const BinaryForm& v) {
  if (v.is_zero()) throw std::invalid_argument("is_balanced_square: zero form");
  if (v.degree % 2 != 0) throw std::invalid_argument("is_balanced_square: degree must be even");
  const int h = v.degree / 2;
  if (h == 0) return std::nullopt;

  MultiplicityProfile p = multiplicity_profile(v);
  Poly u = v.dehomogenize();
  std::vector<Poly> factors = squarefree_decomposition(u);
  auto factor_at = [&factors](int mult) {
    return mult <= static_cast<int>(factors.size()) ? factors[mult - 1] : Poly::constant(Rational(1));
  };

  BinaryForm q = BinaryForm::zero(2);
  if (p.infinity_mult == 0) {
    if (p.finite.size() != 1 || p.finite[0] != std::make_pair(h, 2)) return std::nullopt;
    q = BinaryForm::homogenize(factor_at(h), 2);
  } else if (p.infinity_mult == h) {
    if (p.finite.size() != 1 || p.finite[0] != std::make_pair(h, 1)) return std::nullopt;
    q = BinaryForm::homogenize(factor_at(h), 1) * BinaryForm::linear(Rational(0), Rational(1));
  } else {
    return std::nullopt;
  }

  // Exact power verification.
  BinaryForm power = q.pow(h);
  int lead = v.degree;
  while (lead >= 0 && power.coeffs[lead].is_zero()) --lead;
  Rational c = v.coeffs[lead] / power.coeffs[lead];
  if (!(power * c == v)) return std::nullopt;
  return std::make_pair(c, q);
}

TorusLimit limit_along_torus(const BinaryForm& v, const BinaryForm& l, const BinaryForm& m) {
  if (l.degree != 1 || m.degree != 1)
    throw std::invalid_argument("limit_along_torus: l and m must be linear forms");
  const Rational &alpha = l.coeffs[1], &beta = l.coeffs[0];
  const Rational &gamma = m.coeffs[1], &delta = m.coeffs[0];
  Rational det = alpha * delta - beta * gamma;
  if (det.is_zero()) throw std::invalid_argument("limit_along_torus: l and m are dependent");

  TorusLimit out;
  if (v.is_zero()) {
    out.kind = TorusLimitKind::Zero;
    return out;
  }

  // Coefficients a_i of v = sum a_i l^i m^(d-i): substitute the inverse
  // change of coordinates and read them off.
  BinaryForm rewritten =
      v.substitute(delta / det, -beta / det, -gamma / det, alpha / det);
  int mult_l = 0;
  while (rewritten.coeffs[mult_l].is_zero()) ++mult_l;

  if (2 * mult_l > v.degree) {
    out.kind = TorusLimitKind::Zero;
  } else if (v.degree % 2 == 0 && 2 * mult_l == v.degree) {
    out.kind = TorusLimitKind::Balanced;
    out.value = (l * m).pow(v.degree / 2) * rewritten.coeffs[mult_l];
  } else {
    out.kind = TorusLimitKind::NoLimit;
  }
  return out;
}

OrbitFlags orbit_flags(std::span<const BinaryForm> vs) {
  if (vs.empty()) throw std::invalid_argument("orbit_flags: empty tuple");
  OrbitFlags f;
  bool all_zero = std::all_of(vs.begin(), vs.end(), [](const BinaryForm& v) { return v.is_zero(); });
  if (all_zero) {
    f.closed_maximal_sufficient = false;
    f.reason = OrbitFlagReason::ALL_ZERO;
    return f;
  }
  Rational half(vs[0].degree, 2);
  if (half.is_zero()) half = Rational(1, 2);  // degree 0: constants have no roots at all
  if (common_root_mult_ge(vs, half)) {
    f.closed_maximal_sufficient = false;
    f.reason = OrbitFlagReason::COMMON_HIGH_ROOT;
  } else {
    f.closed_maximal_sufficient = true;
    f.reason = OrbitFlagReason::NO_COMMON_HIGH_ROOT;
  }
  return f;
}

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
    case CaseTag::V: return "V";
    case CaseTag::VI: return "VI";
    case CaseTag::TRIPLE_FRAME: return "TRIPLE_FRAME";
    case CaseTag::ALL_ZERO: return "ALL_ZERO";
  }
  return "?";
}

CaseTag case_classify(std::span<const BinaryForm> vs) {
  if (vs.empty()) throw std::invalid_argument("case_classify: empty tuple");
  const int d = vs[0].degree;
  for (const BinaryForm& v : vs)
    if (v.degree != d) throw std::invalid_argument("case_classify: mixed degrees");

  std::vector<const BinaryForm*> nonzero;
  for (const BinaryForm& v : vs)
    if (!v.is_zero()) nonzero.push_back(&v);
  if (nonzero.empty()) return CaseTag::ALL_ZERO;

  const Rational half(d, 2);
  if (d == 0) return CaseTag::I;  // non-zero constants have no roots at all

  for (const BinaryForm* v : nonzero)
    if (!has_root_mult_ge(*v, half)) return CaseTag::I;

  for (std::size_t i = 0; i < nonzero.size(); ++i)
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      const BinaryForm pair_arr[2] = {*nonzero[i], *nonzero[j]};
      if (!common_root_mult_ge(pair_arr, half)) return CaseTag::II;
    }

  // Common root of multiplicity >= floor(d/2)+1 across the whole tuple.
  if (common_root_mult_ge(vs, Rational(d / 2 + 1))) return CaseTag::III;

  if (d % 2 != 0)
    throw std::logic_error("case_classify: odd degree escaped cases I-III");

  std::vector<std::pair<Rational, BinaryForm>> squares;
  for (const BinaryForm* v : nonzero) {
    auto bs = is_balanced_square(*v);
    if (!bs) return CaseTag::IV;
    squares.push_back(std::move(*bs));
  }

  std::vector<BinaryForm> distinct_q;
  for (const auto& [c, q] : squares) {
    bool known = false;
    for (const BinaryForm& known_q : distinct_q) known = known || known_q == q;
    if (!known) distinct_q.push_back(q);
  }
  if (distinct_q.size() == 1) return CaseTag::VI;
  if (common_root_mult_ge(distinct_q, Rational(1))) return CaseTag::V;
  if (distinct_q.size() == 3) return CaseTag::TRIPLE_FRAME;
  throw std::logic_error("case_classify: pairwise-sharing squares without the triple frame shape");
}

FormTuple::FormTuple(int d, std::vector<BinaryForm> fs) : degree(d), forms(std::move(fs)) {
  if (forms.empty()) throw std::invalid_argument("FormTuple: empty tuple");
  for (const BinaryForm& f : forms)
    if (f.degree != degree) throw std::invalid_argument("FormTuple: degree mismatch");
}

}  // namespace sepinv
