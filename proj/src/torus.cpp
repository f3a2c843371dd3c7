#include "sepinv/torus.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sepinv/lcg.hpp"

namespace sepinv {

WeightMatrix::WeightMatrix(int r, int n, int c, std::vector<long long> b)
    : rank(r), copy_dim(n), copies(c), base(std::move(b)) {
  if (r < 1 || n < 1 || c < 1) throw std::invalid_argument("WeightMatrix: bad shape");
  if (base.size() != static_cast<std::size_t>(r) * n)
    throw std::invalid_argument("WeightMatrix: base entries must be rank x copy_dim");
}

WeightMatrix sharpness_weights(int n, int copies, int band) {
  if (n < 2) throw std::invalid_argument("sharpness_weights: need n >= 2");
  std::vector<long long> base(static_cast<std::size_t>(n - 1) * n, 0);
  for (int row = 0; row < n - 1; ++row) {
    base[row * n + 0] = 1;              // x_1 scales by the full product
    base[row * n + (row + 1)] = -band;  // x_{row+2} scales by alpha_{row+1}^-band
  }
  return WeightMatrix(n - 1, n, copies, std::move(base));
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

std::string Monomial::to_string(int copy_dim) const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (!exponents[i]) continue;
    int copy = static_cast<int>(i) / copy_dim + 1;
    int coord = static_cast<int>(i) % copy_dim + 1;
    if (!out.empty()) out += " ";
    out += "x(" + std::to_string(copy) + ")_" + std::to_string(coord);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

bool is_invariant(const WeightMatrix& w, const Monomial& m) {
  if (static_cast<int>(m.exponents.size()) != w.coords())
    throw std::invalid_argument("is_invariant: exponent length mismatch");
  for (int row = 0; row < w.rank; ++row) {
    long long sum = 0;
    for (int c = 0; c < w.coords(); ++c) sum += w.weight(row, c) * m.exponents[c];
    if (sum != 0) return false;
  }
  return true;
}

std::vector<long long> multidegree(const WeightMatrix& w, const Monomial& m) {
  std::vector<long long> d(w.copy_dim, 0);
  for (int c = 0; c < w.coords(); ++c) d[c % w.copy_dim] += m.exponents[c];
  return d;
}

namespace {

// Branch-and-bound enumeration of the kernel lattice points. Monomials are
// streamed to a sink instead of materialized; degree-12 layers of the larger
// instances run to tens of millions of lattice points.
//
// Coordinates are visited grouped by coordinate index (all copies of x_1,
// then all copies of x_2, ...): copies share weight columns, so each group
// exhausts one weight pattern and the per-row interval pruning closes rows
// early. A second bound compares the remaining degree budget against the L1
// distance still to cancel.
struct KernelEnum {
  const WeightMatrix& w;
  std::vector<bool> coord_allowed;
  std::vector<int> order;
  std::vector<long long> suffix_min, suffix_max;  // per row, over order[pos..)
  std::vector<long long> suffix_l1max;            // max column L1 norm over order[pos..)

  std::vector<int> expo;
  std::vector<long long> partial;
  long long partial_l1 = 0;
  bool exact_degree = false;  // leaf accepts only budget == 0
  const std::function<void(const std::vector<int>&)>* sink = nullptr;

  KernelEnum(const WeightMatrix& wm, const CopySupport& support) : w(wm) {
    coord_allowed.assign(w.coords(), !support.has_value());
    if (support) {
      for (int copy : *support) {
        if (copy < 0 || copy >= w.copies)
          throw std::invalid_argument("invariant_monomials: bad copy index");
        for (int j = 0; j < w.copy_dim; ++j) coord_allowed[copy * w.copy_dim + j] = true;
      }
    }
    for (int j = 0; j < w.copy_dim; ++j)
      for (int copy = 0; copy < w.copies; ++copy) order.push_back(copy * w.copy_dim + j);

    const int n = w.coords();
    suffix_min.assign(static_cast<std::size_t>(w.rank) * (n + 1), 0);
    suffix_max.assign(static_cast<std::size_t>(w.rank) * (n + 1), 0);
    suffix_l1max.assign(n + 1, 0);
    for (int i = n; i-- > 0;) {
      long long l1 = suffix_l1max[i + 1];
      if (coord_allowed[order[i]]) {
        long long col = 0;
        for (int row = 0; row < w.rank; ++row) col += std::abs(w.weight(row, order[i]));
        l1 = std::max(l1, col);
      }
      suffix_l1max[i] = l1;
      for (int row = 0; row < w.rank; ++row) {
        long long mn = suffix_min[row * (n + 1) + i + 1];
        long long mx = suffix_max[row * (n + 1) + i + 1];
        if (coord_allowed[order[i]]) {
          mn = std::min(mn, w.weight(row, order[i]));
          mx = std::max(mx, w.weight(row, order[i]));
        }
        suffix_min[row * (n + 1) + i] = mn;
        suffix_max[row * (n + 1) + i] = mx;
      }
    }
  }

  void run(int budget, bool exact, const std::function<void(const std::vector<int>&)>& cb) {
    expo.assign(w.coords(), 0);
    partial.assign(w.rank, 0);
    partial_l1 = 0;
    exact_degree = exact;
    sink = &cb;
    dfs(0, budget);
  }

  bool feasible(int pos, int budget) const {
    if (partial_l1 > budget * suffix_l1max[pos]) return false;
    const int n = w.coords();
    for (int row = 0; row < w.rank; ++row) {
      long long lo = partial[row] + budget * suffix_min[row * (n + 1) + pos];
      long long hi = partial[row] + budget * suffix_max[row * (n + 1) + pos];
      if (lo > 0 || hi < 0) return false;
    }
    return true;
  }

  void dfs(int pos, int budget) {
    if (!feasible(pos, budget)) return;
    if (pos == w.coords()) {
      if (partial_l1 == 0 && (!exact_degree || budget == 0)) (*sink)(expo);
      return;
    }
    int coord = order[pos];
    int max_e = coord_allowed[coord] ? budget : 0;
    long long old_l1 = partial_l1;
    for (int e = 0; e <= max_e; ++e) {
      expo[coord] = e;
      if (e) {
        for (int row = 0; row < w.rank; ++row) partial[row] += w.weight(row, coord);
        partial_l1 = 0;
        for (long long v : partial) partial_l1 += std::abs(v);
      }
      dfs(pos + 1, budget - e);
    }
    for (int row = 0; row < w.rank; ++row) partial[row] -= w.weight(row, coord) * expo[coord];
    partial_l1 = old_l1;
    expo[coord] = 0;
  }
};

}  // namespace

std::vector<Monomial> invariant_monomials(const WeightMatrix& w, int degree_cap,
                                          const CopySupport& support) {
  if (degree_cap < 0) throw std::invalid_argument("invariant_monomials: negative cap");
  std::vector<Monomial> out;
  KernelEnum e(w, support);
  std::function<void(const std::vector<int>&)> collect = [&out](const std::vector<int>& expo) {
    out.push_back(Monomial{expo});
  };
  e.run(degree_cap, false, collect);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return monomial_less(a, b); });
  return out;
}

namespace {

// Shared by all separates() overloads: walk the kernel lattice one exact
// degree layer at a time and return the lexicographically least separating
// exponent vector of the first layer containing one. Memory stays bounded
// even when high layers hold millions of lattice points.
template <typename Differs>
std::optional<Monomial> first_separating(const WeightMatrix& w, int degree_cap,
                                         const CopySupport& support, Differs differs) {
  KernelEnum e(w, support);
  for (int k = 0; k <= degree_cap; ++k) {
    std::optional<std::vector<int>> best;
    std::function<void(const std::vector<int>&)> check = [&](const std::vector<int>& expo) {
      if (!differs(expo)) return;
      if (!best || expo < *best) best = expo;
    };
    e.run(k, true, check);
    if (best) return Monomial{std::move(*best)};
  }
  return std::nullopt;
}

}  // namespace

Rational eval_monomial(const Monomial& m, std::span<const Rational> point) {
  Rational acc(1);
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (!m.exponents[i]) continue;
    if (point[i].is_zero()) return Rational(0);
    acc *= point[i].pow(static_cast<unsigned>(m.exponents[i]));
  }
  return acc;
}

QOmega eval_monomial(const Monomial& m, std::span<const QOmega> point) {
  QOmega acc(Rational(1), Rational(0));
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] && point[i].a.is_zero() && point[i].b.is_zero()) return QOmega();
    for (int e = 0; e < m.exponents[i]; ++e) acc = acc * point[i];
  }
  return acc;
}

int eval_monomial(const Monomial& m, const GfPoint& point) {
  int acc = 1;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (!m.exponents[i]) continue;
    if (point.coords[i] == 0) return 0;
    acc = point.field->mul(acc, point.field->pow(point.coords[i], m.exponents[i]));
  }
  return acc;
}

namespace {

// Early-zero evaluation on a raw exponent vector, avoiding any copies in the
// streaming hot path.
Rational eval_exponents(const std::vector<int>& expo, std::span<const Rational> point) {
  Rational acc(1);
  for (std::size_t i = 0; i < expo.size(); ++i) {
    if (!expo[i]) continue;
    if (point[i].is_zero()) return Rational(0);
    acc *= point[i].pow(static_cast<unsigned>(expo[i]));
  }
  return acc;
}

QOmega eval_exponents(const std::vector<int>& expo, std::span<const QOmega> point) {
  QOmega acc(Rational(1), Rational(0));
  for (std::size_t i = 0; i < expo.size(); ++i) {
    if (expo[i] && point[i].a.is_zero() && point[i].b.is_zero()) return QOmega();
    for (int e = 0; e < expo[i]; ++e) acc = acc * point[i];
  }
  return acc;
}

int eval_exponents(const std::vector<int>& expo, const GfPoint& point) {
  int acc = 1;
  for (std::size_t i = 0; i < expo.size(); ++i) {
    if (!expo[i]) continue;
    if (point.coords[i] == 0) return 0;
    acc = point.field->mul(acc, point.field->pow(point.coords[i], expo[i]));
  }
  return acc;
}

}  // namespace

std::optional<Monomial> separates(const WeightMatrix& w, std::span<const Rational> v,
                                  std::span<const Rational> v_prime, int degree_cap,
                                  const CopySupport& support) {
  if (static_cast<int>(v.size()) != w.coords() || v.size() != v_prime.size())
    throw std::invalid_argument("separates: point length mismatch");
  return first_separating(w, degree_cap, support, [&](const std::vector<int>& expo) {
    return eval_exponents(expo, v) != eval_exponents(expo, v_prime);
  });
}

std::optional<Monomial> separates(const WeightMatrix& w, std::span<const QOmega> v,
                                  std::span<const QOmega> v_prime, int degree_cap,
                                  const CopySupport& support) {
  if (static_cast<int>(v.size()) != w.coords() || v.size() != v_prime.size())
    throw std::invalid_argument("separates: point length mismatch");
  return first_separating(w, degree_cap, support, [&](const std::vector<int>& expo) {
    return !(eval_exponents(expo, v) == eval_exponents(expo, v_prime));
  });
}

std::optional<Monomial> separates(const WeightMatrix& w, const GfPoint& v, const GfPoint& v_prime,
                                  int degree_cap, const CopySupport& support) {
  if (static_cast<int>(v.coords.size()) != w.coords() || v.coords.size() != v_prime.coords.size())
    throw std::invalid_argument("separates: point length mismatch");
  return first_separating(w, degree_cap, support, [&](const std::vector<int>& expo) {
    return eval_exponents(expo, v) != eval_exponents(expo, v_prime);
  });
}

namespace {

std::vector<int> all_but(int copies, int skip) {
  std::vector<int> s;
  for (int c = 0; c < copies; ++c)
    if (c != skip) s.push_back(c);
  return s;
}

}  // namespace

SharpnessReport sharpness_check(int n, int degree_cap) {
  WeightMatrix w = sharpness_weights(n, n + 1, 2);
  int N = w.coords();
  std::vector<Rational> v(N), vp(N);
  v[0] = Rational(-1);         // copy 1: -e_1
  vp[0] = Rational(1);         // copy 1: e_1
  v[n] = vp[n] = Rational(1);  // copy 2: e_1
  for (int j = 2; j <= n; ++j) {
    // copy j+1 holds e_j
    v[j * n + (j - 1)] = vp[j * n + (j - 1)] = Rational(1);
  }

  SharpnessReport r;
  r.n = n;
  r.degree_cap = degree_cap;
  r.full_support_monomial = separates(w, v, vp, degree_cap);
  r.restricted_all_fail = true;
  for (int skip = 0; skip < w.copies; ++skip) {
    auto support = all_but(w.copies, skip);
    if (separates(w, v, vp, degree_cap, support)) r.restricted_all_fail = false;
  }
  r.ok = r.full_support_monomial.has_value() && r.restricted_all_fail;
  return r;
}

SharpnessReport char2_check(int n, int degree_cap) {
  WeightMatrix w = sharpness_weights(n, n + 1, 3);
  static const Gf gf4(4);
  int N = w.coords();
  GfPoint v{&gf4, std::vector<int>(N, 0)};
  GfPoint vp{&gf4, std::vector<int>(N, 0)};
  v.coords[0] = 2;  // omega = t in GF(4)
  vp.coords[0] = 1;
  v.coords[n] = vp.coords[n] = 1;
  for (int j = 2; j <= n; ++j) v.coords[j * n + (j - 1)] = vp.coords[j * n + (j - 1)] = 1;

  SharpnessReport r;
  r.n = n;
  r.degree_cap = degree_cap;
  r.full_support_monomial = separates(w, v, vp, degree_cap);
  r.restricted_all_fail = true;
  for (int skip = 0; skip < w.copies; ++skip) {
    auto support = all_but(w.copies, skip);
    if (separates(w, v, vp, degree_cap, support)) r.restricted_all_fail = false;
  }
  r.ok = r.full_support_monomial.has_value() && r.restricted_all_fail;
  return r;
}

SpanLemmaReport span_data_respects_separation(const WeightMatrix& w, int trials, std::uint64_t seed,
                                              int degree_cap) {
  SpanLemmaReport report;
  report.trials = trials;
  report.seed = seed;
  Lcg64 rng(seed);
  const int m = w.copies;
  const int n = w.copy_dim;

  auto random_tuple = [&]() {
    std::vector<Rational> t(w.coords());
    for (auto& c : t) c = Rational(rng.next_int(-2, 2));
    return t;
  };

  // One enumeration serves every trial.
  const std::vector<Monomial> monomials = invariant_monomials(w, degree_cap);
  auto separable = [&monomials](std::span<const Rational> a, std::span<const Rational> b) {
    for (const Monomial& mono : monomials)
      if (eval_monomial(mono, a) != eval_monomial(mono, b)) return true;
    return false;
  };

  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> v = random_tuple(), vp = random_tuple();

    // Random invertible integer recombination, built from elementary ops.
    std::vector<std::vector<Rational>> alpha(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i) alpha[i][i] = Rational(1);
    for (int step = 0; step < 2 * m; ++step) {
      int op = static_cast<int>(rng.next_below(3));
      int i = static_cast<int>(rng.next_below(m));
      int j = static_cast<int>(rng.next_below(m));
      if (op == 0 && i != j) {
        Rational c(rng.next_int(-2, 2));
        for (int k = 0; k < m; ++k) alpha[i][k] += c * alpha[j][k];
      } else if (op == 1) {
        std::swap(alpha[i], alpha[j]);
      } else {
        for (int k = 0; k < m; ++k) alpha[i][k] = -alpha[i][k];
      }
    }

    std::vector<Rational> u(w.coords()), up(w.coords());
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < n; ++k) {
        Rational a(0), b(0);
        for (int j = 0; j < m; ++j) {
          a += alpha[i][j] * v[j * n + k];
          b += alpha[i][j] * vp[j * n + k];
        }
        u[i * n + k] = a;
        up[i * n + k] = b;
      }

    bool sep_v = separable(v, vp);
    bool sep_u = separable(u, up);
    if (sep_v) ++report.separable_pairs;
    if (sep_v != sep_u) ++report.disagreements;
  }
  return report;
}

}  // namespace sepinv
