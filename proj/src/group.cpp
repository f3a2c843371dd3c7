#include "sepinv/group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sepinv/quaternion.hpp"

namespace sepinv {

GroupTable::GroupTable(std::string name, int order, std::vector<int> product,
                       std::vector<std::string> labels)
    : name_(std::move(name)), order_(order), product_(std::move(product)), labels_(std::move(labels)) {
  if (order_ < 1) throw std::invalid_argument("GroupTable: order must be positive");
  if (order_ > kMaxOrder) throw std::invalid_argument("GroupTable: order exceeds cap of 200");
  if (product_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("GroupTable: product table has wrong size");
  if (labels_.size() != static_cast<std::size_t>(order_))
    throw std::invalid_argument("GroupTable: label count mismatch");

  for (int v : product_)
    if (v < 0 || v >= order_) throw std::invalid_argument("GroupTable: product entry out of range");

  // Identity at index 0 must be a two-sided unit.
  for (int x = 0; x < order_; ++x) {
    if (mul(kIdentity, x) != x || mul(x, kIdentity) != x)
      throw std::invalid_argument("GroupTable: element 0 is not a two-sided identity");
  }

  // Every row and column is a permutation.
  for (int a = 0; a < order_; ++a) {
    ElemSet row, col;
    for (int b = 0; b < order_; ++b) {
      row.set(mul(a, b));
      col.set(mul(b, a));
    }
    if (row.count() != order_ || col.count() != order_)
      throw std::invalid_argument("GroupTable: row or column is not a permutation");
  }

  inverse_.assign(order_, -1);
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) {
      if (mul(x, y) == kIdentity && mul(y, x) == kIdentity) {
        inverse_[x] = y;
        break;
      }
    }
    if (inverse_[x] < 0) throw std::invalid_argument("GroupTable: missing two-sided inverse");
  }

  // Exhaustive associativity (order <= 200 keeps this cheap).
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw std::invalid_argument("GroupTable: product is not associative");
      }
    }
}

int GroupTable::element_order(int x) const {
  if (x < 0 || x >= order_) throw std::out_of_range("element_order: bad element index");
  int k = 1;
  int cur = x;
  while (cur != kIdentity) {
    cur = mul(cur, x);
    ++k;
  }
  return k;
}

ElemSet GroupTable::center() const {
  ElemSet z;
  for (int x = 0; x < order_; ++x) {
    bool central = true;
    for (int y = 0; y < order_ && central; ++y) central = mul(x, y) == mul(y, x);
    if (central) z.set(x);
  }
  return z;
}

ElemSet GroupTable::generated_subgroup(const ElemSet& seed) const {
  ElemSet in = seed;
  in.set(kIdentity);
  std::vector<int> elems = in.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      int p = mul(elems[i], elems[j]);
      if (!in.test(p)) {
        in.set(p);
        elems.push_back(p);
      }
    }
  }
  return in;
}

ElemSet GroupTable::commutator_subgroup() const {
  ElemSet comms;
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      comms.set(mul(mul(inverse(x), inverse(y)), mul(x, y)));
  return generated_subgroup(comms);
}

int GroupTable::abelianization_order() const { return order_ / commutator_subgroup().count(); }

ElemSet GroupTable::left_translate(int g, const ElemSet& s) const {
  ElemSet r;
  for (int x = s.next(-1); x >= 0; x = s.next(x)) r.set(mul(g, x));
  return r;
}

std::uint64_t GroupTable::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(order_));
  for (int v : product_) mix(static_cast<std::uint64_t>(v));
  return h;
}

GroupTable build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("build_cyclic: n must be >= 1");
  std::vector<int> prod(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "g^" + std::to_string(i);
    for (int j = 0; j < n; ++j) prod[i * n + j] = (i + j) % n;
  }
  return GroupTable("cyclic:" + std::to_string(n), n, std::move(prod), std::move(labels));
}

// Dicyclic group of order 4n with presentation b^4 = 1, a^n = b^2,
// b a b^-1 = a^-1. Elements in normal form a^i b^j, i in [0,2n), j in {0,1};
// index = j*2n + i.
GroupTable build_dicyclic(int n) {
  if (n < 2) throw std::invalid_argument("build_dicyclic: n must be >= 2");
  int two_n = 2 * n;
  int order = 4 * n;
  auto index = [two_n](int i, int j) { return j * two_n + i; };
  std::vector<int> prod(static_cast<std::size_t>(order) * order);
  for (int i1 = 0; i1 < two_n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < two_n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i, j;
          if (j1 == 0) {
            i = (i1 + i2) % two_n;
            j = j2;
          } else if (j2 == 0) {
            // a^i1 b a^i2 = a^(i1-i2) b
            i = ((i1 - i2) % two_n + two_n) % two_n;
            j = 1;
          } else {
            // a^i1 b a^i2 b = a^(i1-i2) b^2 = a^(i1-i2+n)
            i = ((i1 - i2 + n) % two_n + two_n) % two_n;
            j = 0;
          }
          prod[index(i1, j1) * order + index(i2, j2)] = index(i, j);
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < two_n; ++i) {
    labels[index(i, 0)] = "a^" + std::to_string(i);
    labels[index(i, 1)] = "a^" + std::to_string(i) + " b";
  }
  return GroupTable("dicyclic:" + std::to_string(n), order, std::move(prod), std::move(labels));
}

namespace {

// Closes a generator list under multiplication, identity first, breadth-first
// discovery order. Shared by the quaternion and permutation constructions.
template <typename Elem, typename Mul, typename Less>
std::vector<Elem> close_generators(const Elem& identity, const std::vector<Elem>& gens, Mul mul,
                                   Less less, int cap, const char* what) {
  std::vector<Elem> elems{identity};
  std::map<Elem, int, Less> index(less);
  index.emplace(identity, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Elem& g : gens) {
      Elem next = mul(elems[head], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        if (static_cast<int>(elems.size()) > cap)
          throw std::runtime_error(std::string(what) + ": closure exceeded the hard cap (wrong generators?)");
      }
    }
  }
  return elems;
}

template <typename Elem, typename Mul, typename Less, typename Label>
GroupTable table_from_closure(std::string name, const Elem& identity, const std::vector<Elem>& gens,
                              Mul mul, Less less, Label label, int cap) {
  std::vector<Elem> elems = close_generators(identity, gens, mul, less, cap, name.c_str());
  std::map<Elem, int, Less> index(less);
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  int order = static_cast<int>(elems.size());
  std::vector<int> prod(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      auto it = index.find(mul(elems[i], elems[j]));
      if (it == index.end()) throw std::runtime_error(name + ": closure is not multiplicatively closed");
      prod[i * order + j] = it->second;
    }
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) labels[i] = label(elems[i]);
  return GroupTable(std::move(name), order, std::move(prod), std::move(labels));
}

Rational half() { return Rational(1, 2); }

Quaternion quat(QuadraticFieldScalar a, QuadraticFieldScalar b, QuadraticFieldScalar c,
                QuadraticFieldScalar d) {
  Quaternion q;
  q.q = {std::move(a), std::move(b), std::move(c), std::move(d)};
  return q;
}

QuadraticFieldScalar qf(Rational a) { return QuadraticFieldScalar(std::move(a)); }

}  // namespace

GroupTable build_binary_polyhedral(PolyhedralKind kind) {
  // Common 3-fold generator: rotation by 120 degrees about (1,1,1),
  // s = (1 + i + j + k)/2. Each generator set contains an element whose cube
  // or square is -1, so the closure always contains the full double cover.
  Quaternion s = quat(qf(half()), qf(half()), qf(half()), qf(half()));
  std::vector<Quaternion> gens{s};
  std::string name;
  int expected_order = 0;
  switch (kind) {
    case PolyhedralKind::tetrahedral:
      // i: rotation by 180 degrees about the x axis.
      gens.push_back(quat(qf(Rational(0)), qf(Rational(1)), qf(Rational(0)), qf(Rational(0))));
      name = "binary:tet";
      expected_order = 24;
      break;
    case PolyhedralKind::octahedral: {
      // (1+i)/sqrt2: rotation by 90 degrees about the x axis.
      QuadraticFieldScalar inv_sqrt2(Rational(0), half(), Rational(0), Rational(0));
      gens.push_back(quat(inv_sqrt2, inv_sqrt2, qf(Rational(0)), qf(Rational(0))));
      name = "binary:oct";
      expected_order = 48;
      break;
    }
    case PolyhedralKind::icosahedral: {
      // (phi^-1 + phi*i + j)/2: rotation by 72 degrees about the icosahedron
      // vertex axis (1, phi, 0); phi = (1+sqrt5)/2.
      QuadraticFieldScalar inv_phi_half(Rational(-1, 4), Rational(0), Rational(1, 4), Rational(0));
      QuadraticFieldScalar phi_half(Rational(1, 4), Rational(0), Rational(1, 4), Rational(0));
      gens.push_back(quat(inv_phi_half, phi_half, qf(half()), qf(Rational(0))));
      name = "binary:ico";
      expected_order = 120;
      break;
    }
  }
  for (const Quaternion& g : gens) {
    if (g.norm() != QuadraticFieldScalar(Rational(1)))
      throw std::logic_error("build_binary_polyhedral: generator is not a unit quaternion");
  }
  GroupTable table = table_from_closure(
      name, Quaternion::one(), gens, [](const Quaternion& a, const Quaternion& b) { return a * b; },
      [](const Quaternion& a, const Quaternion& b) { return a < b; },
      [](const Quaternion& q) { return q.to_string(); }, GroupTable::kMaxOrder);
  if (table.order() != expected_order)
    throw std::runtime_error(name + ": closure has order " + std::to_string(table.order()) +
                             ", expected " + std::to_string(expected_order));
  if (table.center().count() != 2)
    throw std::runtime_error(name + ": center has unexpected size");
  return table;
}

GroupTable build_klein_four() {
  // C2 x C2 with elements e, a, b, c and xy = the third involution.
  std::vector<int> prod = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  return GroupTable("klein4", 4, std::move(prod), {"e", "a", "b", "c"});
}

namespace {

using Perm = std::vector<int>;

Perm perm_mul(const Perm& a, const Perm& b) {
  // (a*b)(x) = a(b(x)): matches the left-action convention used elsewhere.
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

std::string perm_label(const Perm& p) {
  // Cycle notation on 1-based points.
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) out += " ";
      out += std::to_string(cur + 1);
      first = false;
      cur = static_cast<std::size_t>(p[cur]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

GroupTable permutation_group(std::string name, int points, const std::vector<Perm>& gens, int cap) {
  Perm id(points);
  for (int i = 0; i < points; ++i) id[i] = i;
  return table_from_closure(std::move(name), id, gens, perm_mul,
                            [](const Perm& a, const Perm& b) { return a < b; }, perm_label, cap);
}

Perm cycle(int points, const std::vector<int>& cyc) {
  Perm p(points);
  for (int i = 0; i < points; ++i) p[i] = i;
  for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

}  // namespace

GroupTable build_alternating(int n) {
  if (n == 4) return permutation_group("alternating:4", 4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})}, 12);
  if (n == 5) return permutation_group("alternating:5", 5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1, 2})}, 60);
  throw std::invalid_argument("build_alternating: only n = 4, 5 supported");
}

GroupTable build_symmetric(int n) {
  if (n == 3) return permutation_group("symmetric:3", 3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 6);
  if (n == 4) return permutation_group("symmetric:4", 4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})}, 24);
  throw std::invalid_argument("build_symmetric: only n = 3, 4 supported");
}

GroupTable build_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto parse_n = [&arg, &spec]() {
    try {
      std::size_t used = 0;
      int n = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument("");
      return n;
    } catch (...) {
      throw std::invalid_argument("bad group parameter in '" + spec + "'");
    }
  };
  if (kind == "cyclic") return build_cyclic(parse_n());
  if (kind == "dicyclic") return build_dicyclic(parse_n());
  if (kind == "binary") {
    if (arg == "tet") return build_binary_polyhedral(PolyhedralKind::tetrahedral);
    if (arg == "oct") return build_binary_polyhedral(PolyhedralKind::octahedral);
    if (arg == "ico") return build_binary_polyhedral(PolyhedralKind::icosahedral);
    throw std::invalid_argument("binary group tag must be tet, oct or ico");
  }
  if (kind == "klein4") return build_klein_four();
  if (kind == "alternating") return build_alternating(parse_n());
  if (kind == "symmetric") return build_symmetric(parse_n());
  throw std::invalid_argument("unknown group kind in '" + spec + "'");
}

}  // namespace sepinv
