#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepinv/gf.hpp"
#include "sepinv/helly.hpp"
#include "sepinv/lcg.hpp"

namespace sepinv {

// Actions are immutable after construction and all queries are pure;
// randomized reports aggregate per-trial results order-insensitively.

// Finite G-set as a table: act(g, x) with act(e, x) = x and
// act(g, act(h, x)) = act(gh, x). Validated on construction.
class ActionTable {
 public:
  ActionTable(const GroupTable& group, int points, std::vector<int> act);

  const GroupTable& group() const { return *group_; }
  int points() const { return points_; }
  int act(int g, int x) const { return act_[g * points_ + x]; }

 private:
  const GroupTable* group_;
  int points_;
  std::vector<int> act_;
};

ActionTable regular_action(const GroupTable& g);

// Disjoint union of the coset spaces G/H for the listed lattice subgroups;
// point (i, aH) has index offset_i + coset index.
ActionTable coset_spaces_action(const SubgroupLattice& l, std::span<const int> subgroup_ids);

// Matrix action of G on GF(q)^n. The element -> matrix map must be a
// homomorphism with invertible images; both are validated.
class LinearAction {
 public:
  LinearAction(const GroupTable& group, const Gf& field, int dim, std::vector<int> matrices);

  const GroupTable& group() const { return *group_; }
  const Gf& field() const { return *field_; }
  int dim() const { return dim_; }
  int entry(int g, int row, int col) const { return mats_[(g * dim_ + row) * dim_ + col]; }

  std::vector<int> apply(int g, std::span<const int> vec) const;

 private:
  const GroupTable* group_;
  const Gf* field_;
  int dim_;
  std::vector<int> mats_;
};

// Permutation matrices of a G-set over GF(q).
LinearAction permutation_linear_action(const ActionTable& a, const Gf& field);

// For cyclic groups: the generator acts as diag(z, z^2, ..., z^dim) where z
// is the least element of multiplicative order n in GF(q). Requires n | q-1.
LinearAction diagonal_cyclic_action(const GroupTable& cyclic, const Gf& field, int dim);

// {g : g(x) = x'} as an element set; empty or a left coset of Stab(x).
ElemSet transporter(const ActionTable& a, int x, int x_prime);
ElemSet transporter(const LinearAction& a, std::span<const int> x, std::span<const int> x_prime);

struct OrbitCheck {
  bool same = false;
  int witness = -1;  // a group element mapping x to x', when same
};

OrbitCheck same_orbit(std::span<const ElemSet> transporters);

enum class DwiseVerdict { GLOBAL_EQUAL, DWISE_FAILS, COUNTEREXAMPLE };
const char* to_string(DwiseVerdict v);

// Verdict for "all d-wise projections orbit-equal vs global orbit-equal",
// computed from the per-coordinate transporter sets.
DwiseVerdict dwise_verdict(std::span<const ElemSet> transporters, int order, int d);

// G-set tuple instance.
struct TupleInstance {
  const ActionTable* action = nullptr;
  std::vector<int> x, x_prime;
};

OrbitCheck same_orbit(const TupleInstance& t);
DwiseVerdict dwise_implies_global(const TupleInstance& t, int d);

// Linear tuple instance over GF(q)^n.
struct LinearTupleInstance {
  const LinearAction* action = nullptr;
  std::vector<std::vector<int>> x, x_prime;
};

OrbitCheck same_orbit(const LinearTupleInstance& t);
DwiseVerdict dwise_implies_global(const LinearTupleInstance& t, int d);

std::uint64_t instance_hash(const TupleInstance& t);
std::uint64_t instance_hash(const LinearTupleInstance& t);

// Lower-bound construction: the G-set is the disjoint union of the coset
// spaces of the witness subgroups, x_i the base point of the i-th space and
// x_i' its translate by the witness representative. All (s-1)-wise
// projections are orbit-equal while the full tuples are not.
struct WitnessInstance {
  ActionTable action;
  std::vector<int> x, x_prime;
};

WitnessInstance witness_instance(const SubgroupLattice& l, const HellyWitness& w);

struct ReductiveViolation {
  std::vector<std::vector<int>> x, x_prime;
};

struct ReductiveReport {
  int dim = 0;
  int d = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int dwise_equal_count = 0;  // trials whose d-wise projections all matched
  std::vector<ReductiveViolation> violations;
};

// Randomized check of "d-wise orbit equality implies global" for random
// tuple pairs over V^m, m in [dim+2, dim+4]. d defaults to dim+1. Trials mix
// independent pairs, exact translates, and translates with one coordinate
// resampled; the generator is the documented LCG, so reports reproduce
// bit-for-bit.
ReductiveReport verify_reductive_bound(const LinearAction& a, int trials, std::uint64_t seed,
                                       std::optional<int> d_override = std::nullopt);

}  // namespace sepinv
