#include "pointfree/poset.hpp"

#include <algorithm>

namespace pointfree {

Poset Poset::validate(const std::vector<std::vector<bool>>& leq,
                      std::vector<std::string> labels) {
  const int n = int(leq.size());
  for (const auto& row : leq)
    if (int(row.size()) != n) throw Error("poset: relation table is not square");

  for (int i = 0; i < n; ++i)
    if (!leq[i][i])
      throw PosetValidationError(PosetValidationError::Kind::NotReflexive, i, i, -1,
                                 "poset: not reflexive at " + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw PosetValidationError(PosetValidationError::Kind::NotAntisymmetric, i, j, -1,
                                   "poset: not antisymmetric at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k])
          throw PosetValidationError(PosetValidationError::Kind::NotTransitive, i, j, k,
                                     "poset: not transitive at (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
    }

  Poset p;
  p.n_ = n;
  p.up_.assign(n, Mask(n));
  p.down_.assign(n, Mask(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        p.up_[i].set(j);
        p.down_[j].set(i);
      }
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (int(labels.size()) != n) throw Error("poset: label count mismatch");
  p.labels_ = std::move(labels);
  return p;
}

bool Poset::is_upset(const Mask& m) const {
  for (int i = m.first(); i != -1; i = m.next(i))
    if (!up_[i].subset_of(m)) return false;
  return true;
}

bool Poset::is_downset(const Mask& m) const {
  for (int i = m.first(); i != -1; i = m.next(i))
    if (!down_[i].subset_of(m)) return false;
  return true;
}

bool Poset::is_chain(const Mask& m) const {
  for (int i = m.first(); i != -1; i = m.next(i))
    for (int j = m.next(i); j != -1; j = m.next(j))
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

Mask Poset::minimal_elements(const Mask& within) const {
  Mask r(n_);
  for (int i = within.first(); i != -1; i = within.next(i))
    if ((down_[i] & within).count() == 1) r.set(i);
  return r;
}

Mask Poset::maximal_elements(const Mask& within) const {
  Mask r(n_);
  for (int i = within.first(); i != -1; i = within.next(i))
    if ((up_[i] & within).count() == 1) r.set(i);
  return r;
}

bool Poset::is_tree() const {
  if (n_ == 0) return false;
  Mask mins = minimal_elements();
  if (mins.count() != 1) return false;
  for (int i = 0; i < n_; ++i) {
    Mask strict_down = down_[i];
    strict_down.reset(i);
    if (!is_chain(strict_down)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n_; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) {
          covered = false;
          break;
        }
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

namespace {

// children[i] = elements covered by ... rather: immediate successors in the
// tree (elements whose strict down-set ends at i).
std::vector<std::vector<int>> tree_children(const Poset& p) {
  std::vector<std::vector<int>> ch(p.size());
  for (auto [a, b] : p.cover_pairs()) ch[a].push_back(b);
  return ch;
}

uint64_t sat_mul(uint64_t a, uint64_t b, uint64_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap;
  return a * b;
}

uint64_t count_upsets_tree(const Poset& p, const std::vector<std::vector<int>>& ch, int node,
                           uint64_t cap) {
  // upsets of the subtree = whole-subtree plus independent choices per child
  uint64_t prod = 1;
  for (int c : ch[node]) {
    prod = sat_mul(prod, count_upsets_tree(p, ch, c, cap), cap);
    if (prod >= cap) return cap;
  }
  return prod >= cap ? cap : prod + 1;
}

void enumerate_upsets_tree(const Poset& p, const std::vector<std::vector<int>>& ch, int node,
                           std::vector<Mask>& out) {
  // out gets every upset of the subtree rooted at `node`
  std::vector<std::vector<Mask>> per_child;
  per_child.reserve(ch[node].size());
  for (int c : ch[node]) {
    std::vector<Mask> sub;
    enumerate_upsets_tree(p, ch, c, sub);
    per_child.push_back(std::move(sub));
  }
  std::vector<Mask> acc{Mask(p.size())};
  for (const auto& choices : per_child) {
    std::vector<Mask> next;
    next.reserve(acc.size() * choices.size());
    for (const Mask& a : acc)
      for (const Mask& c : choices) next.push_back(a | c);
    acc = std::move(next);
  }
  out = std::move(acc);
  Mask whole = p.up(node);
  out.push_back(whole);
}

}  // namespace

uint64_t count_upsets(const Poset& p, uint64_t cap) {
  if (p.is_tree()) {
    auto ch = tree_children(p);
    int root = p.minimal_elements().first();
    return count_upsets_tree(p, ch, root, cap);
  }
  if (p.size() >= 63) return cap;
  uint64_t total = 0;
  const uint64_t lim = uint64_t(1) << p.size();
  for (uint64_t bits = 0; bits < lim; ++bits) {
    Mask m(p.size());
    for (int i = 0; i < p.size(); ++i)
      if ((bits >> i) & 1) m.set(i);
    if (p.is_upset(m) && ++total >= cap) return cap;
  }
  return total;
}

UpsetFamily enumerate_upsets(const Poset& p, uint64_t bound) {
  UpsetFamily fam;
  fam.poset = p;
  if (p.is_tree()) {
    if (count_upsets(p, bound + 1) > bound)
      throw TooLargeError("enumerate_upsets: tree upset family exceeds bound");
    auto ch = tree_children(p);
    int root = p.minimal_elements().first();
    enumerate_upsets_tree(p, ch, root, fam.members);
  } else {
    if (p.size() > 63 || (uint64_t(1) << p.size()) > bound)
      throw TooLargeError("enumerate_upsets: 2^size exceeds bound and poset is not a tree");
    const uint64_t lim = uint64_t(1) << p.size();
    for (uint64_t bits = 0; bits < lim; ++bits) {
      Mask m(p.size());
      for (int i = 0; i < p.size(); ++i)
        if ((bits >> i) & 1) m.set(i);
      if (p.is_upset(m)) fam.members.push_back(m);
    }
  }
  std::sort(fam.members.begin(), fam.members.end());
  fam.members.erase(std::unique(fam.members.begin(), fam.members.end()), fam.members.end());
  fam.index.reserve(fam.members.size() * 2);
  for (int i = 0; i < int(fam.members.size()); ++i) fam.index.emplace(fam.members[i], i);
  return fam;
}

namespace {

void extend_chain(const Poset& p, Mask chain, Mask candidates, std::vector<Mask>& out) {
  if (candidates.empty()) {
    out.push_back(chain);
    return;
  }
  // candidates are exactly the elements comparable with everything in chain;
  // extend by each minimal candidate to avoid emitting a chain twice
  Mask mins = p.minimal_elements(candidates);
  for (int c = mins.first(); c != -1; c = mins.next(c)) {
    Mask next_chain = chain;
    next_chain.set(c);
    Mask next_cand(p.size());
    for (int x = candidates.first(); x != -1; x = candidates.next(x))
      if (x != c && (p.leq(c, x) || p.leq(x, c))) next_cand.set(x);
    extend_chain(p, next_chain, next_cand, out);
  }
}

}  // namespace

std::vector<Mask> maximal_chains(const Poset& p) {
  std::vector<Mask> out;
  if (p.size() == 0) return out;
  extend_chain(p, Mask(p.size()), Mask::full(p.size()), out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> chains_through(const Poset& p, int required, const Mask& excluded) {
  if (excluded.test(required)) throw Error("chains_through: required element is excluded");
  std::vector<Mask> out;
  for (const Mask& c : maximal_chains(p))
    if (c.test(required) && !c.intersects(excluded)) out.push_back(c);
  return out;
}

}  // namespace pointfree
