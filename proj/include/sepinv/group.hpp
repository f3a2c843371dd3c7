#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepinv/elem_set.hpp"

namespace sepinv {

// A finite group as an immutable multiplication table. Element 0 is always
// the identity; the remaining indices follow the construction's canonical
// ordering (normal forms for cyclic/dicyclic, breadth-first discovery for
// generator closures). Immutable after construction, safe to share between
// concurrent readers.
class GroupTable {
 public:
  static constexpr int kMaxOrder = 200;
  static constexpr int kIdentity = 0;

  // Validates the table exhaustively: identity, inverses, row/column
  // permutations, and full associativity.
  GroupTable(std::string name, int order, std::vector<int> product, std::vector<std::string> labels);

  int order() const { return order_; }
  int mul(int a, int b) const { return product_[a * order_ + b]; }
  int inverse(int x) const { return inverse_[x]; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::string& name() const { return name_; }

  int element_order(int x) const;
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }

  ElemSet all_elements() const { return ElemSet::full(order_); }
  ElemSet center() const;

  // Subgroup generated by a set of elements (closure under multiplication).
  ElemSet generated_subgroup(const ElemSet& seed) const;
  ElemSet commutator_subgroup() const;
  int abelianization_order() const;

  // {g*x : x in s}
  ElemSet left_translate(int g, const ElemSet& s) const;

  // FNV-1a over the order and the multiplication table; labels and name do
  // not participate, so mathematically equal tables share cache entries.
  std::uint64_t content_hash() const;

 private:
  std::string name_;
  int order_;
  std::vector<int> product_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

GroupTable build_cyclic(int n);
GroupTable build_dicyclic(int n);

enum class PolyhedralKind { tetrahedral, octahedral, icosahedral };
GroupTable build_binary_polyhedral(PolyhedralKind kind);

// Test fixtures used throughout the suites and exposed on the CLI.
GroupTable build_klein_four();
GroupTable build_alternating(int n);  // n in {4, 5}
GroupTable build_symmetric(int n);    // n in {3, 4}

// Parses "cyclic:6", "dicyclic:3", "binary:tet|oct|ico", "klein4",
// "alternating:4", "symmetric:4". Throws std::invalid_argument otherwise.
GroupTable build_from_spec(const std::string& spec);

}  // namespace sepinv
