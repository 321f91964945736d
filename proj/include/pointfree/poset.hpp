#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/mask.hpp"

namespace pointfree {

// Finite partially ordered set. Elements are dense indices 0..n-1; the order
// is kept as one up-mask and one down-mask per element (both include the
// element itself). Immutable after construction.
class Poset {
 public:
  Poset() = default;  // empty; fill through validate

  // Validates reflexivity, antisymmetry and transitivity of the relation
  // table; throws PosetValidationError with the first violating triple.
  static Poset validate(const std::vector<std::vector<bool>>& leq,
                        std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int a, int b) const { return up_[a].test(b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  const Mask& up(int a) const { return up_[a]; }      // {x | a <= x}
  const Mask& down(int a) const { return down_[a]; }  // {x | x <= a}
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }

  bool is_upset(const Mask& m) const;
  bool is_downset(const Mask& m) const;
  bool is_chain(const Mask& m) const;

  // Minimal / maximal elements of the whole poset or of a subset.
  Mask minimal_elements() const { return minimal_elements(Mask::full(n_)); }
  Mask maximal_elements() const { return maximal_elements(Mask::full(n_)); }
  Mask minimal_elements(const Mask& within) const;
  Mask maximal_elements(const Mask& within) const;

  // Rooted tree test: unique minimum and every strict down-set is a chain.
  bool is_tree() const;

  // Hasse cover pairs (a covered-by b), used by DOT export.
  std::vector<std::pair<int, int>> cover_pairs() const;

 private:
  int n_ = 0;
  std::vector<Mask> up_, down_;
  std::vector<std::string> labels_;
};

// All upward-closed subsets of a poset in canonical (mask value) order with a
// membership index. Owns a copy of the poset.
struct UpsetFamily {
  Poset poset;
  std::vector<Mask> members;
  std::unordered_map<Mask, int, MaskHash> index;

  int find(const Mask& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }
};

// Counts upsets without listing them (tree product recurrence when the poset
// is a tree, otherwise subset filtering); saturates at `cap`.
uint64_t count_upsets(const Poset& p, uint64_t cap);

// Enumerates every upset. Non-tree posets with 2^size above the bound are
// rejected (TooLargeError); trees of any size are accepted as long as the
// resulting family itself stays within the bound.
UpsetFamily enumerate_upsets(const Poset& p, uint64_t bound = (uint64_t(1) << 20));

inline Poset validate_poset(const std::vector<std::vector<bool>>& leq,
                            std::vector<std::string> labels = {}) {
  return Poset::validate(leq, std::move(labels));
}

// Every maximal chain, each as a mask, in canonical order.
std::vector<Mask> maximal_chains(const Poset& p);

// Maximal chains containing `required` and disjoint from `excluded`.
std::vector<Mask> chains_through(const Poset& p, int required, const Mask& excluded);

}  // namespace pointfree
