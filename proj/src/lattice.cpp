#include "sepinv/lattice.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sepinv {

namespace {
constexpr int kCacheFormatVersion = 1;
constexpr int kCacheMinOrder = 48;
}  // namespace

SubgroupLattice::SubgroupLattice(const GroupTable& group, std::vector<ElemSet> subgroups)
    : group_(&group), subgroups_(std::move(subgroups)) {
  std::sort(subgroups_.begin(), subgroups_.end(), [](const ElemSet& a, const ElemSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.numeric_less(b);
  });
  subgroups_.erase(std::unique(subgroups_.begin(), subgroups_.end()), subgroups_.end());

  int n = count();
  sizes_.resize(n);
  for (int i = 0; i < n; ++i) sizes_[i] = subgroups_[i].count();

  contains_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) contains_[i * n + j] = subgroups_[j].subset_of(subgroups_[i]) ? 1 : 0;

  ElemSet trivial = ElemSet::single(GroupTable::kIdentity);
  ElemSet whole = group.all_elements();
  trivial_id_ = find(trivial);
  whole_id_ = find(whole);
  if (trivial_id_ < 0 || whole_id_ < 0)
    throw std::logic_error("SubgroupLattice: missing trivial or whole subgroup");
}

int SubgroupLattice::find(const ElemSet& members) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), members,
                             [](const ElemSet& a, const ElemSet& b) {
                               int ca = a.count(), cb = b.count();
                               if (ca != cb) return ca < cb;
                               return a.numeric_less(b);
                             });
  if (it != subgroups_.end() && *it == members) return static_cast<int>(it - subgroups_.begin());
  return -1;
}

namespace {

std::vector<ElemSet> enumerate_subgroup_sets(const GroupTable& g) {
  std::vector<ElemSet> subs;
  auto add_unique = [&subs](const ElemSet& s) {
    if (std::find(subs.begin(), subs.end(), s) == subs.end()) {
      subs.push_back(s);
      return true;
    }
    return false;
  };

  // Seed with all cyclic subgroups.
  for (int x = 0; x < g.order(); ++x) add_unique(g.generated_subgroup(ElemSet::single(x)));

  // Close under pairwise join until a fixed point.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElemSet join = g.generated_subgroup(subs[i] | subs[j]);
      add_unique(join);
    }
  }
  return subs;
}

bool validate_subgroup(const GroupTable& g, const ElemSet& s) {
  if (!s.test(GroupTable::kIdentity)) return false;
  for (int x = s.next(-1); x >= 0; x = s.next(x)) {
    if (!s.test(g.inverse(x))) return false;
    for (int y = s.next(-1); y >= 0; y = s.next(y))
      if (!s.test(g.mul(x, y))) return false;
  }
  return true;
}

std::uint64_t hash_to_u64(const std::string& hex) {
  return std::stoull(hex, nullptr, 16);
}

std::string u64_to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::optional<std::vector<ElemSet>> try_load_cache(const std::string& path, const GroupTable& g) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
    if (doc.at("format_version").get<int>() != kCacheFormatVersion) return std::nullopt;
    if (hash_to_u64(doc.at("group_hash").get<std::string>()) != g.content_hash()) return std::nullopt;
    std::vector<ElemSet> subs;
    for (const auto& hex : doc.at("subgroups")) {
      auto s = elemset_from_hex(hex.get<std::string>(), g.order());
      if (!s) return std::nullopt;
      if (!validate_subgroup(g, *s)) return std::nullopt;
      subs.push_back(*s);
    }
    if (subs.empty()) return std::nullopt;
    return subs;
  } catch (...) {
    return std::nullopt;
  }
}

void store_cache(const std::string& path, const GroupTable& g, const SubgroupLattice& l) {
  nlohmann::json doc;
  doc["format_version"] = kCacheFormatVersion;
  doc["group_hash"] = u64_to_hex(g.content_hash());
  nlohmann::json subs = nlohmann::json::array();
  for (int i = 0; i < l.count(); ++i) subs.push_back(elemset_to_hex(l.subgroup(i), g.order()));
  doc["subgroups"] = subs;
  nlohmann::json pairs = nlohmann::json::array();
  for (int i = 0; i < l.count(); ++i)
    for (int j = 0; j < l.count(); ++j)
      if (i != j && l.contains(j, i)) pairs.push_back(nlohmann::json::array({i, j}));
  doc["containment"] = pairs;
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::ofstream out(path);
  if (out) out << doc.dump(2) << "\n";
}

}  // namespace

std::string elemset_to_hex(const ElemSet& s, int nbits) {
  int digits = (nbits + 3) / 4;
  std::string out(digits, '0');
  static const char* hexd = "0123456789abcdef";
  for (int d = 0; d < digits; ++d) {
    int nibble = static_cast<int>((s.w[d / 16] >> ((d % 16) * 4)) & 0xf);
    out[digits - 1 - d] = hexd[nibble];
  }
  return out;
}

std::optional<ElemSet> elemset_from_hex(const std::string& hex, int nbits) {
  ElemSet s;
  int digits = static_cast<int>(hex.size());
  for (int d = 0; d < digits; ++d) {
    char ch = hex[digits - 1 - d];
    int nibble;
    if (ch >= '0' && ch <= '9')
      nibble = ch - '0';
    else if (ch >= 'a' && ch <= 'f')
      nibble = ch - 'a' + 10;
    else
      return std::nullopt;
    if (d * 4 >= ElemSet::kMaxBits && nibble) return std::nullopt;
    if (d * 4 < ElemSet::kMaxBits) s.w[d / 16] |= static_cast<std::uint64_t>(nibble) << ((d % 16) * 4);
  }
  for (int i = s.next(-1); i >= 0; i = s.next(i))
    if (i >= nbits) return std::nullopt;
  return s;
}

std::string lattice_cache_path(const std::string& cache_dir, const GroupTable& g) {
  return cache_dir + "/lattice-" + u64_to_hex(g.content_hash()) + ".json";
}

SubgroupLattice enumerate_subgroups(const GroupTable& g, const std::string& cache_dir) {
  if (g.order() > GroupTable::kMaxOrder) throw std::invalid_argument("enumerate_subgroups: order > 200");
  bool use_cache = !cache_dir.empty() && g.order() >= kCacheMinOrder;
  if (use_cache) {
    if (auto cached = try_load_cache(lattice_cache_path(cache_dir, g), g))
      return SubgroupLattice(g, std::move(*cached));
  }
  SubgroupLattice lattice(g, enumerate_subgroup_sets(g));
  if (use_cache) store_cache(lattice_cache_path(cache_dir, g), g, lattice);
  return lattice;
}

int lattice_lambda(const SubgroupLattice& l) {
  int n = l.count();
  // Longest chain ending at each subgroup; ids are sorted by size, so every
  // proper subgroup of i precedes i.
  std::vector<int> best(n, 0);
  int lambda = 0;
  for (int i = 0; i < n; ++i) {
    if (i == l.whole_id()) continue;
    best[i] = 1;
    for (int j = 0; j < i; ++j)
      if (j != l.whole_id() && l.contains(i, j) && l.size_of(j) < l.size_of(i))
        best[i] = std::max(best[i], best[j] + 1);
    lambda = std::max(lambda, best[i]);
  }
  return lambda;
}

bool is_intersection_independent(const SubgroupLattice& l, std::span<const int> ids) {
  if (ids.empty()) throw std::invalid_argument("is_intersection_independent: empty family");
  int n = static_cast<int>(ids.size());
  for (int i = 0; i < n; ++i) {
    ElemSet inter = l.group().all_elements();
    for (int j = 0; j < n; ++j)
      if (j != i) inter &= l.subgroup(ids[j]);
    if (inter.subset_of(l.subgroup(ids[i]))) return false;
  }
  return true;
}

namespace {

struct MuSearch {
  const SubgroupLattice& l;
  std::vector<int> stack;
  MuResult best;

  void run() {
    best.mu = 0;
    dfs(ElemSet::full(l.group().order()), 0);
  }

  void dfs(const ElemSet& inter, int first_id) {
    int depth = static_cast<int>(stack.size());
    if (depth > best.mu) {
      best.mu = depth;
      best.witness = stack;
    }
    for (int id = first_id; id < l.count(); ++id) {
      if (id == l.whole_id()) continue;
      ElemSet next = inter & l.subgroup(id);
      // Prefixes of an independent family have strictly decreasing
      // intersections, so equality prunes the whole branch.
      if (next == inter) continue;
      stack.push_back(id);
      if (is_intersection_independent(l, stack)) dfs(next, id + 1);
      stack.pop_back();
    }
  }
};

}  // namespace

MuResult lattice_mu(const SubgroupLattice& l) {
  MuSearch search{l, {}, {}};
  search.run();
  return search.best;
}

}  // namespace sepinv
