#include "sepinv/helly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepinv {

Coset make_coset(const SubgroupLattice& l, int subgroup_id, int element) {
  if (subgroup_id < 0 || subgroup_id >= l.count())
    throw std::out_of_range("make_coset: bad subgroup id");
  if (element < 0 || element >= l.group().order())
    throw std::out_of_range("make_coset: bad element index");
  Coset c;
  c.subgroup = subgroup_id;
  c.members = l.group().left_translate(element, l.subgroup(subgroup_id));
  c.representative = c.members.min_element();
  return c;
}

std::optional<Coset> coset_intersection(const SubgroupLattice& l, std::span<const Coset> family) {
  if (family.empty()) throw std::invalid_argument("coset_intersection: empty family");
  ElemSet inter = family[0].members;
  for (std::size_t i = 1; i < family.size(); ++i) inter &= family[i].members;
  if (inter.empty()) return std::nullopt;

  // A non-empty intersection of left cosets is a left coset of the
  // intersection of the subgroups; normalize through any common element.
  int rep = inter.min_element();
  ElemSet subgroup_members = l.group().left_translate(l.group().inverse(rep), inter);
  int id = l.find(subgroup_members);
  if (id < 0) throw std::logic_error("coset_intersection: intersection subgroup missing from lattice");
  Coset c;
  c.subgroup = id;
  c.representative = rep;
  c.members = inter;
  return c;
}

bool witness_is_valid(const SubgroupLattice& l, const HellyWitness& w) {
  const std::size_t s = w.cosets.size();
  if (s < 2) return false;
  for (const Coset& c : w.cosets) {
    if (c.subgroup < 0 || c.subgroup >= l.count()) return false;
    if (c.representative < 0 || c.representative >= l.group().order()) return false;
    Coset rebuilt = make_coset(l, c.subgroup, c.representative);
    if (rebuilt.members != c.members) return false;
  }
  ElemSet total = w.cosets[0].members;
  for (std::size_t i = 1; i < s; ++i) total &= w.cosets[i].members;
  if (!total.empty()) return false;
  for (std::size_t skip = 0; skip < s; ++skip) {
    ElemSet inter = l.group().all_elements();
    for (std::size_t i = 0; i < s; ++i)
      if (i != skip) inter &= w.cosets[i].members;
    if (inter.empty()) return false;
  }
  return true;
}

namespace {

// All distinct cosets of one subgroup, sorted by canonical representative.
std::vector<Coset> cosets_of(const SubgroupLattice& l, int subgroup_id) {
  std::vector<Coset> out;
  ElemSet seen;
  for (int x = 0; x < l.group().order(); ++x) {
    if (seen.test(x)) continue;
    Coset c = make_coset(l, subgroup_id, x);
    seen |= c.members;
    out.push_back(c);
  }
  return out;  // discovery order by minimal uncovered element = rep order
}

// DFS for an inclusion-minimal empty coset family of the exact target size,
// lexicographically least under (subgroup ids, representatives). Subgroup
// prefixes of length < size must be intersection independent (every proper
// subfamily of a minimal family is contained in a leave-one-out family, and
// those are forced independent by the Lemma-4 argument); the full subgroup
// family need not be.
struct WitnessSearch {
  const SubgroupLattice& l;
  const std::vector<std::vector<Coset>>& cosets;  // per subgroup id
  int target = 0;

  std::vector<int> ids;
  std::vector<Coset> chosen;
  std::optional<HellyWitness> found;

  void run() {
    ids.clear();
    chosen.clear();
    found.reset();
    dfs_subgroups(ElemSet::full(l.group().order()), 0);
  }

  void dfs_subgroups(const ElemSet& subgroup_inter, int first_id) {
    if (found) return;
    int depth = static_cast<int>(ids.size());
    if (depth == target) {
      if (leave_one_outs_independent()) try_representatives();
      return;
    }
    bool last_level = depth + 1 == target;
    for (int id = first_id; id < l.count() && !found; ++id) {
      if (id == l.whole_id()) continue;
      ElemSet next = subgroup_inter & l.subgroup(id);
      if (!last_level) {
        // Interior prefix: must stay independent, so the intersection must
        // strictly decrease.
        if (next == subgroup_inter) continue;
        ids.push_back(id);
        if (is_intersection_independent(l, ids)) {
          int next_first = target >= 3 ? id + 1 : id;  // size-2 families may repeat a subgroup
          dfs_subgroups(next, next_first);
        }
        ids.pop_back();
      } else {
        ids.push_back(id);
        dfs_subgroups(next, id + 1);
        ids.pop_back();
      }
    }
  }

  bool leave_one_outs_independent() const {
    std::vector<int> sub;
    for (std::size_t skip = 0; skip < ids.size(); ++skip) {
      sub.clear();
      for (std::size_t i = 0; i < ids.size(); ++i)
        if (i != skip) sub.push_back(ids[i]);
      if (!is_intersection_independent(l, sub)) return false;
    }
    return true;
  }

  void try_representatives() {
    // First coset is the subgroup itself: every minimal family translates to
    // one whose lex-first coset contains the identity, and that translate is
    // lex-least among its translates.
    chosen.clear();
    chosen.push_back(make_coset(l, ids[0], GroupTable::kIdentity));
    dfs_reps(chosen[0].members, 1);
    chosen.clear();
  }

  // `running` is taken by value: the recursion mutates `chosen`, so references
  // into it would dangle across reallocations.
  void dfs_reps(ElemSet running, int level) {
    if (found) return;
    if (level == target) {
      if (minimal_empty()) found = HellyWitness{chosen};
      return;
    }
    bool last = level + 1 == target;
    // Strict halving chain must survive to the last level.
    int needed = last ? 0 : 1 << (target - 2 - level);
    for (const Coset& c : cosets[ids[level]]) {
      if (found) return;
      ElemSet next = running & c.members;
      if (last) {
        if (!next.empty()) continue;
      } else {
        if (next.empty() || next == running || next.count() < needed) continue;
      }
      chosen.push_back(c);
      dfs_reps(next, level + 1);
      chosen.pop_back();
    }
  }

  bool minimal_empty() const {
    for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
      ElemSet inter = l.group().all_elements();
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (i != skip) inter &= chosen[i].members;
      if (inter.empty()) return false;
    }
    return true;  // total emptiness is enforced by the last DFS level
  }
};

}  // namespace

KappaResult kappa_exact(const GroupTable& g, const SubgroupLattice& l) {
  KappaResult result;
  if (g.order() == 1) {
    result.kappa = 1;  // degenerate by convention; excluded from paper claims
    result.mu = 0;
    return result;
  }
  result.mu = lattice_mu(l).mu;

  std::vector<std::vector<Coset>> cosets(l.count());
  for (int id = 0; id < l.count(); ++id) cosets[id] = cosets_of(l, id);

  WitnessSearch search{l, cosets, 0, {}, {}, {}};
  for (int size = result.mu + 1; size >= 2; --size) {
    search.target = size;
    search.run();
    if (search.found) {
      result.kappa = size;
      result.witness = std::move(search.found);
      return result;
    }
  }
  throw std::logic_error("kappa_exact: no witness found for a non-trivial group");
}

namespace {

struct OracleSearch {
  std::vector<ElemSet> cosets;  // all distinct cosets, lex order by (subgroup, rep)
  int order = 0;
  int cap = 0;
  int n = 0;

  std::vector<int> stack;

  bool violation_exists() {
    stack.clear();
    return dfs(0, ElemSet::full(order));
  }

  bool dfs(int first, const ElemSet& running) {
    int m = static_cast<int>(stack.size());
    if (m >= static_cast<int>(cosets.size())) return false;
    for (int idx = first; idx < static_cast<int>(cosets.size()); ++idx) {
      ElemSet next = running & cosets[idx];
      if (next.empty()) {
        // Candidate violation; sub-prefixes of any violation family are
        // non-empty, so there is no need to extend past an empty node.
        if (m + 1 >= n) {
          stack.push_back(idx);
          bool ok = all_n_subsets_intersect();
          stack.pop_back();
          if (ok) return true;
        }
        continue;
      }
      if (m + 1 < cap) {
        stack.push_back(idx);
        bool hit = dfs(idx + 1, next);
        stack.pop_back();
        if (hit) return true;
      }
    }
    return false;
  }

  bool all_n_subsets_intersect() const {
    int m = static_cast<int>(stack.size());
    std::vector<int> pick(n);
    // Enumerate n-subsets of the stack.
    for (int i = 0; i < n; ++i) pick[i] = i;
    while (true) {
      ElemSet inter = ElemSet::full(order);
      for (int i = 0; i < n; ++i) inter &= cosets[stack[pick[i]]];
      if (inter.empty()) return false;
      int pos = n - 1;
      while (pos >= 0 && pick[pos] == m - n + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < n; ++i) pick[i] = pick[i - 1] + 1;
    }
    return true;
  }
};

}  // namespace

int kappa_oracle(const GroupTable& g, const SubgroupLattice& l, int cap) {
  if (cap < 1) throw std::invalid_argument("kappa_oracle: cap must be positive");
  OracleSearch search;
  search.order = g.order();
  search.cap = cap;
  for (int id = 0; id < l.count(); ++id)
    for (const Coset& c : cosets_of(l, id)) search.cosets.push_back(c.members);

  for (int n = 1; n <= cap; ++n) {
    search.n = n;
    if (!search.violation_exists()) return n;
  }
  throw std::runtime_error("kappa_oracle: no n <= cap satisfies the Helly property (cap too small?)");
}

GroupReport report_for_group(const GroupTable& g, const std::string& cache_dir) {
  SubgroupLattice lattice = enumerate_subgroups(g, cache_dir);
  KappaResult kr = kappa_exact(g, lattice);

  GroupReport r;
  r.group = g.name();
  r.order = g.order();
  r.kappa = kr.kappa;
  r.mu = kr.mu;
  r.lambda = lattice_lambda(lattice);
  r.bounds_ok = kr.kappa <= kr.mu + 1 && kr.mu <= r.lambda;

  const std::string& name = g.name();
  if (name.rfind("cyclic:", 0) == 0 && g.order() > 1) {
    r.claim = "kappa = 2";
    r.paper_ok = kr.kappa == 2;
  } else if (name.rfind("dicyclic:", 0) == 0) {
    r.claim = "kappa <= 4";
    r.paper_ok = kr.kappa <= 4;
  } else if (name.rfind("binary:", 0) == 0) {
    r.claim = "kappa <= 6";
    r.paper_ok = kr.kappa <= 6;
  } else {
    r.claim = "";
    r.paper_ok = true;
  }

  if (kr.witness) {
    for (const Coset& c : kr.witness->cosets) {
      WitnessCosetReport wc;
      wc.subgroup_size = lattice.size_of(c.subgroup);
      wc.representative_label = g.label(c.representative);
      for (int x = c.members.next(-1); x >= 0; x = c.members.next(x)) wc.members.push_back(g.label(x));
      r.witness.push_back(std::move(wc));
    }
  }
  return r;
}

Section4Report verify_section4(std::span<const GroupTable> zoo, const std::string& cache_dir) {
  Section4Report report;
  report.all_ok = true;
  for (const GroupTable& g : zoo) {
    report.groups.push_back(report_for_group(g, cache_dir));
    const GroupReport& r = report.groups.back();
    report.all_ok = report.all_ok && r.bounds_ok && r.paper_ok;
  }
  return report;
}

std::vector<GroupTable> build_zoo(int max_cyclic, int max_dicyclic) {
  std::vector<GroupTable> zoo;
  for (int n = 2; n <= max_cyclic; ++n) zoo.push_back(build_cyclic(n));
  for (int n = 2; n <= max_dicyclic; ++n) zoo.push_back(build_dicyclic(n));
  zoo.push_back(build_binary_polyhedral(PolyhedralKind::tetrahedral));
  zoo.push_back(build_binary_polyhedral(PolyhedralKind::octahedral));
  zoo.push_back(build_binary_polyhedral(PolyhedralKind::icosahedral));
  return zoo;
}

}  // namespace sepinv
