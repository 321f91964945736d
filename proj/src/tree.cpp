#include "pointfree/tree.hpp"

#include <algorithm>
#include <map>

#include "pointfree/errors.hpp"

namespace pointfree {

Tree Tree::from_parents(std::vector<int> parent, std::vector<std::string> labels) {
  const int n = int(parent.size());
  if (n == 0) throw Error("tree: empty");
  Tree t;
  t.parent_ = std::move(parent);
  t.children_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    if (t.parent_[v] == -1) {
      if (t.root_ != -1) throw Error("tree: two roots");
      t.root_ = v;
    } else {
      if (t.parent_[v] < 0 || t.parent_[v] >= n) throw Error("tree: parent out of range");
      t.children_[t.parent_[v]].push_back(v);
    }
  }
  if (t.root_ == -1) throw Error("tree: no root");
  t.level_.assign(n, -1);
  t.level_[t.root_] = 0;
  std::vector<int> stack{t.root_};
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    t.height_ = std::max(t.height_, t.level_[v]);
    for (int c : t.children_[v]) {
      if (t.level_[c] != -1) throw Error("tree: parent links have a cycle");
      t.level_[c] = t.level_[v] + 1;
      stack.push_back(c);
    }
  }
  if (seen != n) throw Error("tree: parent links have a cycle");
  if (labels.empty()) {
    labels.resize(n);
    for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  }
  if (int(labels.size()) != n) throw Error("tree: label count mismatch");
  t.labels_ = std::move(labels);
  return t;
}

bool Tree::is_ancestor(int a, int b) const {
  for (int v = b; v != -1; v = parent_[v])
    if (v == a) return true;
  return false;
}

Mask Tree::ancestors(int v) const {
  Mask m(size());
  for (int x = v; x != -1; x = parent_[x]) m.set(x);
  return m;
}

Mask Tree::subtree(int v) const {
  Mask m(size());
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    m.set(x);
    for (int c : children_[x]) stack.push_back(c);
  }
  return m;
}

Mask Tree::leaves() const {
  Mask m(size());
  for (int v = 0; v < size(); ++v)
    if (is_leaf(v)) m.set(v);
  return m;
}

std::vector<Mask> Tree::level_masks() const {
  std::vector<Mask> out(height_ + 1, Mask(size()));
  for (int v = 0; v < size(); ++v) out[level_[v]].set(v);
  return out;
}

Poset Tree::to_poset() const {
  const int n = size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int b = 0; b < n; ++b)
    for (int a = b; a != -1; a = parent_[a]) leq[a][b] = true;
  return Poset::validate(leq, labels_);
}

namespace {

std::string code_of(const Tree& t, int v) {
  std::vector<std::string> child_codes;
  for (int c : t.children(v)) child_codes.push_back(code_of(t, c));
  std::sort(child_codes.begin(), child_codes.end());
  std::string s = "(";
  for (const auto& c : child_codes) s += c;
  return s + ")";
}

}  // namespace

std::string Tree::canonical_code() const { return code_of(*this, root_); }

bool isomorphic(const Tree& a, const Tree& b) {
  return a.size() == b.size() && a.canonical_code() == b.canonical_code();
}

Tree cantor_tree(int depth) { return baire_tree(2, depth); }

Tree baire_tree(int width, int depth) {
  if (width < 1 || depth < 0) throw Error("baire_tree: bad parameters");
  std::vector<int> parent{-1};
  std::vector<int> frontier{0};
  for (int d = 0; d < depth; ++d) {
    std::vector<int> next;
    for (int v : frontier)
      for (int k = 0; k < width; ++k) {
        parent.push_back(v);
        next.push_back(int(parent.size()) - 1);
      }
    frontier = std::move(next);
  }
  return Tree::from_parents(std::move(parent));
}

Tree koenig_tree(int width, int depth) {
  if (width < 1 || depth < 0) throw Error("koenig_tree: bad parameters");
  // spine s_0..s_depth; each spine node except the tip carries width-1 leaves
  std::vector<int> parent{-1};
  int spine = 0;
  for (int d = 0; d < depth; ++d) {
    for (int k = 0; k < width - 1; ++k) parent.push_back(spine);
    parent.push_back(spine);
    spine = int(parent.size()) - 1;
  }
  return Tree::from_parents(std::move(parent));
}

Tree chain_tree(int n) {
  if (n < 1) throw Error("chain_tree: bad size");
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v - 1;
  return Tree::from_parents(std::move(parent));
}

Tree star_tree(int leaves) {
  std::vector<int> parent(leaves + 1, 0);
  parent[0] = -1;
  return Tree::from_parents(std::move(parent));
}

namespace {

// Canonical codes of all rooted shapes with n nodes, memoized per size.
const std::vector<std::string>& shape_codes(int n) {
  static std::map<int, std::vector<std::string>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  std::vector<std::string> out;
  if (n == 1) {
    out.push_back("()");
  } else {
    // choose a multiset of child shapes with sizes summing to n-1;
    // enforce non-increasing (size, code) picks so each multiset appears once
    struct Gen {
      int target;
      std::vector<std::string> acc_children;
      std::vector<std::string>* out;
      void rec(int remaining, int max_size, const std::string& max_code) {
        if (remaining == 0) {
          std::string s = "(";
          std::vector<std::string> sorted = acc_children;
          std::sort(sorted.begin(), sorted.end());
          for (const auto& c : sorted) s += c;
          out->push_back(s + ")");
          return;
        }
        for (int sz = std::min(remaining, max_size); sz >= 1; --sz)
          for (const std::string& code : shape_codes(sz)) {
            if (sz == max_size && code > max_code) continue;
            acc_children.push_back(code);
            rec(remaining - sz, sz, code);
            acc_children.pop_back();
          }
      }
    };
    Gen g{n - 1, {}, &out};
    std::string top_sentinel(size_t(2 * n + 2), '~');
    g.rec(n - 1, n - 1, top_sentinel);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return memo.emplace(n, std::move(out)).first->second;
}

Tree tree_from_code(const std::string& code) {
  std::vector<int> parent;
  int cur = -1;
  for (char ch : code) {
    if (ch == '(') {
      parent.push_back(cur);
      cur = int(parent.size()) - 1;
    } else {
      cur = parent[cur];
    }
  }
  return Tree::from_parents(std::move(parent));
}

}  // namespace

std::vector<Tree> all_tree_shapes(int n) {
  std::vector<Tree> out;
  for (const std::string& code : shape_codes(n)) out.push_back(tree_from_code(code));
  return out;
}

}  // namespace pointfree
