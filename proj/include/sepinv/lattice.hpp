#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepinv/elem_set.hpp"
#include "sepinv/group.hpp"

namespace sepinv {

// All subgroups of a GroupTable, sorted by (size, numeric bitset order), plus
// the containment relation. Immutable once enumerated.
class SubgroupLattice {
 public:
  SubgroupLattice(const GroupTable& group, std::vector<ElemSet> subgroups);

  const GroupTable& group() const { return *group_; }
  int count() const { return static_cast<int>(subgroups_.size()); }
  const ElemSet& subgroup(int id) const { return subgroups_[id]; }
  int size_of(int id) const { return sizes_[id]; }
  bool contains(int outer, int inner) const { return contains_[outer * count() + inner]; }

  int trivial_id() const { return trivial_id_; }
  int whole_id() const { return whole_id_; }

  // Lattice id of an exact subgroup bitset, or -1.
  int find(const ElemSet& members) const;

 private:
  const GroupTable* group_;
  std::vector<ElemSet> subgroups_;
  std::vector<int> sizes_;
  std::vector<char> contains_;  // contains_[i*count+j]: subgroup j <= subgroup i
  int trivial_id_ = -1;
  int whole_id_ = -1;
};

// Complete enumeration: seeds with all cyclic subgroups and closes under
// pairwise join until a fixed point. When cache_dir is given and the group
// has order >= 48, results are cached to disk keyed by the table's content
// hash; corrupt or mismatched cache files are ignored and recomputed.
SubgroupLattice enumerate_subgroups(const GroupTable& g, const std::string& cache_dir = "");

// Maximal number of subgroups in a strictly increasing chain of proper
// subgroups (the trivial subgroup counts, the whole group does not).
int lattice_lambda(const SubgroupLattice& l);

// No member contains the intersection of the others; a singleton {H} is
// independent iff H is proper (the empty intersection is the whole group).
bool is_intersection_independent(const SubgroupLattice& l, std::span<const int> ids);

struct MuResult {
  int mu = 0;
  std::vector<int> witness;  // lexicographically minimal family of size mu
};

// Exact maximum size of an intersection independent family, by DFS over
// ascending subgroup ids; prefixes of an independent family are independent
// and their running intersections strictly decrease, which prunes the search.
MuResult lattice_mu(const SubgroupLattice& l);

// Cache schema helpers (also used by the CLI's lattice subcommand).
std::string lattice_cache_path(const std::string& cache_dir, const GroupTable& g);
std::string elemset_to_hex(const ElemSet& s, int nbits);
std::optional<ElemSet> elemset_from_hex(const std::string& hex, int nbits);

}  // namespace sepinv
