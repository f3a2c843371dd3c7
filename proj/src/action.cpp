#include "sepinv/action.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepinv {

Gf::Gf(int q) : q_(q) {
  struct Shape {
    int q, p, k, modulus;  // modulus: reduction polynomial digits in base p
  };
  // GF(4): t^2+t+1, GF(8): t^3+t+1, GF(9): t^2+1.
  static const Shape shapes[] = {{2, 2, 1, 0}, {3, 3, 1, 0}, {4, 2, 2, 7},  {5, 5, 1, 0},
                                 {7, 7, 1, 0}, {8, 2, 3, 11}, {9, 3, 2, 10}};
  const Shape* shape = nullptr;
  for (const auto& s : shapes)
    if (s.q == q) shape = &s;
  if (!shape) throw std::invalid_argument("Gf: q must be a prime power <= 9");
  p_ = shape->p;
  k_ = shape->k;

  auto to_digits = [this](int v) {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  };
  auto from_digits = [this](const std::vector<int>& d) {
    int v = 0;
    for (int i = k_; i-- > 0;) v = v * p_ + d[i];
    return v;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  // Reduction digits of the modulus below its leading t^k term.
  std::vector<int> mod_digits(k_, 0);
  for (int i = 0, v = shape->modulus; i < k_; ++i, v /= p_) mod_digits[i] = v % p_;

  for (int a = 0; a < q_; ++a) {
    auto da = to_digits(a);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = from_digits(dn);
    for (int b = 0; b < q_; ++b) {
      auto db = to_digits(b);
      std::vector<int> ds(k_);
      for (int i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = from_digits(ds);

      // Polynomial product reduced by the modulus.
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
        int c = prod[deg];
        if (!c) continue;
        prod[deg] = 0;
        for (int i = 0; i < k_; ++i)
          prod[deg - k_ + i] = ((prod[deg - k_ + i] - c * mod_digits[i]) % p_ + p_ * p_) % p_;
      }
      std::vector<int> dm(prod.begin(), prod.begin() + k_);
      mul_[a * q_ + b] = from_digits(dm);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
}

int Gf::element_order(int a) const {
  if (a == 0) throw std::domain_error("Gf: order of zero");
  int k = 1, cur = a;
  while (cur != 1) {
    cur = mul(cur, a);
    ++k;
  }
  return k;
}

ActionTable::ActionTable(const GroupTable& group, int points, std::vector<int> act)
    : group_(&group), points_(points), act_(std::move(act)) {
  if (points_ < 1) throw std::invalid_argument("ActionTable: no points");
  if (act_.size() != static_cast<std::size_t>(group.order()) * points_)
    throw std::invalid_argument("ActionTable: table size mismatch");
  for (int v : act_)
    if (v < 0 || v >= points_) throw std::invalid_argument("ActionTable: point out of range");
  for (int x = 0; x < points_; ++x)
    if (this->act(GroupTable::kIdentity, x) != x)
      throw std::invalid_argument("ActionTable: identity does not fix points");
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h) {
      int gh = group.mul(g, h);
      for (int x = 0; x < points_; ++x)
        if (this->act(g, this->act(h, x)) != this->act(gh, x))
          throw std::invalid_argument("ActionTable: not a left action");
    }
}

ActionTable regular_action(const GroupTable& g) {
  std::vector<int> act(static_cast<std::size_t>(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) act[a * g.order() + x] = g.mul(a, x);
  return ActionTable(g, g.order(), std::move(act));
}

ActionTable coset_spaces_action(const SubgroupLattice& l, std::span<const int> subgroup_ids) {
  const GroupTable& g = l.group();
  // Canonical coset representatives per component, in ascending rep order.
  std::vector<std::vector<ElemSet>> spaces;
  int total = 0;
  for (int id : subgroup_ids) {
    std::vector<ElemSet> cosets;
    ElemSet seen;
    for (int x = 0; x < g.order(); ++x) {
      if (seen.test(x)) continue;
      ElemSet c = g.left_translate(x, l.subgroup(id));
      seen |= c;
      cosets.push_back(c);
    }
    total += static_cast<int>(cosets.size());
    spaces.push_back(std::move(cosets));
  }
  std::vector<int> act(static_cast<std::size_t>(g.order()) * total);
  for (int a = 0; a < g.order(); ++a) {
    int offset = 0;
    for (const auto& cosets : spaces) {
      for (std::size_t i = 0; i < cosets.size(); ++i) {
        ElemSet moved = g.left_translate(a, cosets[i]);
        int target = -1;
        for (std::size_t j = 0; j < cosets.size(); ++j)
          if (cosets[j] == moved) {
            target = static_cast<int>(j);
            break;
          }
        act[a * total + offset + static_cast<int>(i)] = offset + target;
      }
      offset += static_cast<int>(cosets.size());
    }
  }
  return ActionTable(g, total, std::move(act));
}

LinearAction::LinearAction(const GroupTable& group, const Gf& field, int dim, std::vector<int> matrices)
    : group_(&group), field_(&field), dim_(dim), mats_(std::move(matrices)) {
  if (dim_ < 1) throw std::invalid_argument("LinearAction: dimension must be positive");
  if (mats_.size() != static_cast<std::size_t>(group.order()) * dim_ * dim_)
    throw std::invalid_argument("LinearAction: matrix data size mismatch");
  for (int v : mats_)
    if (v < 0 || v >= field.size()) throw std::invalid_argument("LinearAction: entry out of field");
  // Identity maps to the identity matrix; the map is a homomorphism. Both
  // checks together force invertibility.
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (entry(GroupTable::kIdentity, r, c) != (r == c ? 1 : 0))
        throw std::invalid_argument("LinearAction: identity matrix expected at the identity");
  for (int a = 0; a < group.order(); ++a)
    for (int b = 0; b < group.order(); ++b) {
      int ab = group.mul(a, b);
      for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) {
          int sum = 0;
          for (int k = 0; k < dim_; ++k)
            sum = field.add(sum, field.mul(entry(a, r, k), entry(b, k, c)));
          if (sum != entry(ab, r, c))
            throw std::invalid_argument("LinearAction: matrices do not respect the group table");
        }
    }
}

std::vector<int> LinearAction::apply(int g, std::span<const int> vec) const {
  std::vector<int> out(dim_, 0);
  for (int r = 0; r < dim_; ++r) {
    int sum = 0;
    for (int c = 0; c < dim_; ++c) sum = field_->add(sum, field_->mul(entry(g, r, c), vec[c]));
    out[r] = sum;
  }
  return out;
}

LinearAction permutation_linear_action(const ActionTable& a, const Gf& field) {
  int n = a.points();
  const GroupTable& g = a.group();
  std::vector<int> mats(static_cast<std::size_t>(g.order()) * n * n, 0);
  for (int e = 0; e < g.order(); ++e)
    for (int x = 0; x < n; ++x) mats[(e * n + a.act(e, x)) * n + x] = 1;
  return LinearAction(g, field, n, std::move(mats));
}

LinearAction diagonal_cyclic_action(const GroupTable& cyclic, const Gf& field, int dim) {
  int n = cyclic.order();
  int z = 0;
  for (int cand = 2; cand < field.size(); ++cand)
    if (field.element_order(cand) == n) {
      z = cand;
      break;
    }
  if (n == 1) z = 1;
  if (z == 0)
    throw std::invalid_argument("diagonal_cyclic_action: GF(q) has no element of order n");
  std::vector<int> mats(static_cast<std::size_t>(n) * dim * dim, 0);
  for (int e = 0; e < n; ++e)
    for (int r = 0; r < dim; ++r)
      mats[(e * dim + r) * dim + r] = field.pow(z, static_cast<unsigned>(e) * (r + 1));
  return LinearAction(cyclic, field, dim, std::move(mats));
}

ElemSet transporter(const ActionTable& a, int x, int x_prime) {
  ElemSet t;
  for (int g = 0; g < a.group().order(); ++g)
    if (a.act(g, x) == x_prime) t.set(g);
  return t;
}

ElemSet transporter(const LinearAction& a, std::span<const int> x, std::span<const int> x_prime) {
  if (static_cast<int>(x.size()) != a.dim() || static_cast<int>(x_prime.size()) != a.dim())
    throw std::invalid_argument("transporter: vector dimension mismatch");
  ElemSet t;
  for (int g = 0; g < a.group().order(); ++g) {
    bool ok = true;
    for (int r = 0; r < a.dim() && ok; ++r) {
      int sum = 0;
      for (int c = 0; c < a.dim(); ++c) sum = a.field().add(sum, a.field().mul(a.entry(g, r, c), x[c]));
      ok = sum == x_prime[r];
    }
    if (ok) t.set(g);
  }
  return t;
}

OrbitCheck same_orbit(std::span<const ElemSet> transporters) {
  if (transporters.empty()) throw std::invalid_argument("same_orbit: empty tuple");
  ElemSet inter = transporters[0];
  for (std::size_t i = 1; i < transporters.size(); ++i) inter &= transporters[i];
  OrbitCheck r;
  r.same = !inter.empty();
  r.witness = r.same ? inter.min_element() : -1;
  return r;
}

const char* to_string(DwiseVerdict v) {
  switch (v) {
    case DwiseVerdict::GLOBAL_EQUAL: return "GLOBAL_EQUAL";
    case DwiseVerdict::DWISE_FAILS: return "DWISE_FAILS";
    case DwiseVerdict::COUNTEREXAMPLE: return "COUNTEREXAMPLE";
  }
  return "?";
}

DwiseVerdict dwise_verdict(std::span<const ElemSet> transporters, int order, int d) {
  int m = static_cast<int>(transporters.size());
  if (d < 1 || d > m) throw std::invalid_argument("dwise_verdict: need 1 <= d <= m");
  ElemSet total = ElemSet::full(order);
  for (const ElemSet& t : transporters) total &= t;
  if (!total.empty()) return DwiseVerdict::GLOBAL_EQUAL;

  // All d-subsets must have a common transporter element.
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    ElemSet inter = ElemSet::full(order);
    for (int i = 0; i < d; ++i) inter &= transporters[pick[i]];
    if (inter.empty()) return DwiseVerdict::DWISE_FAILS;
    int pos = d - 1;
    while (pos >= 0 && pick[pos] == m - d + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
  }
  return DwiseVerdict::COUNTEREXAMPLE;
}

namespace {

std::vector<ElemSet> tuple_transporters(const TupleInstance& t) {
  if (t.x.size() != t.x_prime.size()) throw std::invalid_argument("tuple lengths differ");
  if (t.x.empty()) throw std::invalid_argument("empty tuple");
  std::vector<ElemSet> ts;
  ts.reserve(t.x.size());
  for (std::size_t i = 0; i < t.x.size(); ++i) ts.push_back(transporter(*t.action, t.x[i], t.x_prime[i]));
  return ts;
}

std::vector<ElemSet> tuple_transporters(const LinearTupleInstance& t) {
  if (t.x.size() != t.x_prime.size()) throw std::invalid_argument("tuple lengths differ");
  if (t.x.empty()) throw std::invalid_argument("empty tuple");
  std::vector<ElemSet> ts;
  ts.reserve(t.x.size());
  for (std::size_t i = 0; i < t.x.size(); ++i) ts.push_back(transporter(*t.action, t.x[i], t.x_prime[i]));
  return ts;
}

}  // namespace

OrbitCheck same_orbit(const TupleInstance& t) { return same_orbit(std::span<const ElemSet>(tuple_transporters(t))); }

DwiseVerdict dwise_implies_global(const TupleInstance& t, int d) {
  auto ts = tuple_transporters(t);
  return dwise_verdict(ts, t.action->group().order(), d);
}

OrbitCheck same_orbit(const LinearTupleInstance& t) {
  return same_orbit(std::span<const ElemSet>(tuple_transporters(t)));
}

DwiseVerdict dwise_implies_global(const LinearTupleInstance& t, int d) {
  auto ts = tuple_transporters(t);
  return dwise_verdict(ts, t.action->group().order(), d);
}

namespace {

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::uint64_t instance_hash(const TupleInstance& t) {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv_mix(h, t.action->group().content_hash());
  h = fnv_mix(h, static_cast<std::uint64_t>(t.action->points()));
  for (int v : t.x) h = fnv_mix(h, static_cast<std::uint64_t>(v));
  for (int v : t.x_prime) h = fnv_mix(h, static_cast<std::uint64_t>(v));
  return h;
}

std::uint64_t instance_hash(const LinearTupleInstance& t) {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv_mix(h, t.action->group().content_hash());
  h = fnv_mix(h, static_cast<std::uint64_t>(t.action->dim()));
  h = fnv_mix(h, static_cast<std::uint64_t>(t.action->field().size()));
  for (const auto& vec : t.x)
    for (int v : vec) h = fnv_mix(h, static_cast<std::uint64_t>(v));
  for (const auto& vec : t.x_prime)
    for (int v : vec) h = fnv_mix(h, static_cast<std::uint64_t>(v));
  return h;
}

WitnessInstance witness_instance(const SubgroupLattice& l, const HellyWitness& w) {
  if (!witness_is_valid(l, w)) throw std::invalid_argument("witness_instance: invalid witness");
  std::vector<int> ids;
  for (const Coset& c : w.cosets) ids.push_back(c.subgroup);
  ActionTable action = coset_spaces_action(l, ids);

  // Base point of component i is its identity coset; the i-th coset space is
  // laid out in ascending representative order, so the identity coset sits at
  // the component offset.
  WitnessInstance inst{std::move(action), {}, {}};
  const GroupTable& g = l.group();
  int offset = 0;
  for (const Coset& c : w.cosets) {
    inst.x.push_back(offset);
    inst.x_prime.push_back(inst.action.act(c.representative, offset));
    offset += g.order() / l.size_of(c.subgroup);
  }
  return inst;
}

ReductiveReport verify_reductive_bound(const LinearAction& a, int trials, std::uint64_t seed,
                                       std::optional<int> d_override) {
  ReductiveReport report;
  report.dim = a.dim();
  report.d = d_override.value_or(a.dim() + 1);
  report.seed = seed;
  report.trials = trials;
  if (report.d < 1) throw std::invalid_argument("verify_reductive_bound: d must be positive");

  Lcg64 rng(seed);
  const int q = a.field().size();
  auto random_vec = [&]() {
    std::vector<int> v(a.dim());
    for (int& c : v) c = static_cast<int>(rng.next_below(q));
    return v;
  };

  for (int trial = 0; trial < trials; ++trial) {
    int m = std::max(report.d, a.dim() + 2 + static_cast<int>(rng.next_below(3)));
    LinearTupleInstance inst;
    inst.action = &a;
    for (int i = 0; i < m; ++i) inst.x.push_back(random_vec());
    int mode = static_cast<int>(rng.next_below(3));
    if (mode == 0) {
      for (int i = 0; i < m; ++i) inst.x_prime.push_back(random_vec());
    } else {
      int g = static_cast<int>(rng.next_below(a.group().order()));
      for (int i = 0; i < m; ++i) inst.x_prime.push_back(a.apply(g, inst.x[i]));
      if (mode == 2) inst.x_prime[rng.next_below(m)] = random_vec();
    }
    DwiseVerdict verdict = dwise_implies_global(inst, report.d);
    if (verdict != DwiseVerdict::DWISE_FAILS) ++report.dwise_equal_count;
    if (verdict == DwiseVerdict::COUNTEREXAMPLE)
      report.violations.push_back(ReductiveViolation{inst.x, inst.x_prime});
  }
  return report;
}

}  // namespace sepinv
