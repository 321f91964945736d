#pragma once

#include <string>
#include <vector>

#include "pointfree/poset.hpp"

namespace pointfree {

// Finite rooted tree. Node order is ancestor-below-descendant: the root is
// the minimum, leaves are maximal, a branch is a root-to-leaf path.
class Tree {
 public:
  // parent[i] = parent index, -1 for the root (exactly one allowed).
  static Tree from_parents(std::vector<int> parent, std::vector<std::string> labels = {});

  int size() const { return int(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  bool is_leaf(int v) const { return children_[v].empty(); }
  int level_of(int v) const { return level_[v]; }
  int height() const { return height_; }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_ancestor(int a, int b) const;  // a on the root path of b (or a == b)
  Mask ancestors(int v) const;           // down-set of v, v included
  Mask subtree(int v) const;             // up-set of v, v included
  Mask leaves() const;
  std::vector<Mask> level_masks() const;

  // The tree as a poset (ancestor <= descendant).
  Poset to_poset() const;

  // Canonical shape encoding; equal strings = isomorphic rooted trees.
  std::string canonical_code() const;

 private:
  int root_ = -1, height_ = 0;
  std::vector<int> parent_, level_;
  std::vector<std::vector<int>> children_;
  std::vector<std::string> labels_;
};

bool isomorphic(const Tree& a, const Tree& b);

// Generators for the classic trees, truncated to finite size.
Tree cantor_tree(int depth);                 // complete binary
Tree baire_tree(int width, int depth);       // complete width-ary
Tree koenig_tree(int width, int depth);      // spine of length depth, width-1 leaves per spine node
Tree chain_tree(int n);
Tree star_tree(int leaves);

// All rooted tree shapes with exactly n nodes, one representative per
// isomorphism class, deterministic order.
std::vector<Tree> all_tree_shapes(int n);

}  // namespace pointfree
