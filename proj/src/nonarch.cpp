#include "pointfree/nonarch.hpp"

#include <algorithm>

namespace pointfree {

PairClass classify_pair(const FiniteFrame& f, int a, int b) {
  if (a == b) return PairClass::Equal;
  if (f.leq(a, b)) return PairClass::LeftBelow;
  if (f.leq(b, a)) return PairClass::RightBelow;
  if (f.meet(a, b) == f.bottom()) return PairClass::Disjoint;
  return PairClass::Incomparable;
}

TrichotomyReport check_nonarch_base(const FiniteFrame& f, const Mask& members) {
  TrichotomyReport rep;
  rep.base_law = f.is_base(members, &rep.base_failure);
  rep.member_order = members.bits();
  const int k = int(rep.member_order.size());
  rep.classification.assign(k, std::vector<PairClass>(k, PairClass::Equal));
  rep.holds = true;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      PairClass c = classify_pair(f, rep.member_order[i], rep.member_order[j]);
      rep.classification[i][j] = c;
      if (c == PairClass::Incomparable && rep.holds) {
        rep.holds = false;
        rep.violating_pair = {rep.member_order[i], rep.member_order[j]};
      }
    }
  return rep;
}

namespace {

// Base members along each maximal carrier chain, sorted ascending in the
// order. Every chain of base members is a subset of one of these.
std::vector<std::vector<int>> base_chains(const FiniteFrame& f, const Mask& members) {
  std::vector<std::vector<int>> out;
  for (const Mask& chain : maximal_chains(f.carrier())) {
    Mask in_base = chain & members;
    if (in_base.empty()) continue;
    std::vector<int> sorted = in_base.bits();
    std::sort(sorted.begin(), sorted.end(),
              [&](int x, int y) { return x != y && f.leq(x, y); });
    out.push_back(std::move(sorted));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

BaseSet chain_closure(const FiniteFrame& f, const BaseSet& b) {
  TrichotomyReport pre = check_nonarch_base(f, b);
  if (!pre.base_law)
    throw NotABaseError(pre.base_failure, "chain_closure: input is not a base");
  if (!pre.holds) throw NotNonArchError("chain_closure: input base is not non-archimedean");

  // joins of nonempty chains in the base; on a finite carrier each such join
  // is the chain's maximum, so nothing genuinely new can appear
  Mask closed = b.members;
  for (const auto& chain : base_chains(f, b.members)) {
    int acc = f.bottom();
    for (int x : chain) {
      acc = f.join(acc, x);
      closed.set(acc);
    }
  }

  BaseSet out{&f, closed};
  if (!check_nonarch_base(f, out).ok())
    throw NotNonArchError("chain_closure: closure lost the trichotomy");
  // closed under suprema of chains: joins of all upper sections stay inside
  for (const auto& chain : base_chains(f, closed))
    for (size_t start = 0; start < chain.size(); ++start) {
      int acc = f.bottom();
      for (size_t i = start; i < chain.size(); ++i) acc = f.join(acc, chain[i]);
      if (!closed.test(acc))
        throw NotNonArchError("chain_closure: not closed under chain suprema");
    }
  return out;
}

std::vector<int> canonical_decomposition(const FiniteFrame& f, const BaseSet& b, int a) {
  BaseSet closed = chain_closure(f, b);  // rechecks the preconditions
  return canonical_decomposition_closed(f, closed.members, a);
}

std::vector<int> canonical_decomposition_closed(const FiniteFrame& f, const Mask& members,
                                                int a) {
  Mask below = members & f.carrier().down(a);
  below.reset(f.bottom());
  Mask maxima = f.carrier().maximal_elements(below);
  std::vector<int> out = maxima.bits();

  int joined = f.bottom();
  for (size_t i = 0; i < out.size(); ++i) {
    joined = f.join(joined, out[i]);
    for (size_t j = i + 1; j < out.size(); ++j)
      if (f.meet(out[i], out[j]) != f.bottom())
        throw CrossCheckMismatch("canonical_decomposition: members not disjoint");
  }
  if (joined != a)
    throw NoNontrivialDecompositionError(
        a, "canonical_decomposition: maximal basics below " + f.label(a) + " join to " +
               f.label(joined));
  return out;
}

OrthoReport ortho_classify(const FiniteFrame& f, const BaseSet& b, const Mask& subset) {
  if (!subset.subset_of(b.members)) throw Error("ortho_classify: subset not within base");
  OrthoReport rep;
  rep.meet = f.meet_all(subset);
  rep.meet_in_base = b.members.test(rep.meet);
  if (rep.meet == f.bottom()) {
    rep.outcome = OrthoOutcome::MeetZero;
    return rep;
  }
  if (f.carrier().down(rep.meet).count() <= 2) {
    rep.outcome = OrthoOutcome::IntervalSimple;
    return rep;
  }
  if (auto c = f.complement(rep.meet)) {
    rep.outcome = OrthoOutcome::Complemented;
    rep.complement_witness = *c;
    return rep;
  }
  rep.outcome = OrthoOutcome::Unclassified;
  return rep;
}

bool is_atomic_in_base(const FiniteFrame& f, const BaseSet& b, int a) {
  for (int x = b.members.first(); x != -1; x = b.members.next(x))
    if (x != f.bottom() && f.lt(x, a)) return false;
  return true;
}

namespace {

// Maximal basics strictly below `e`, bottom excluded.
std::vector<int> proper_decomposition(const FiniteFrame& f, const Mask& members, int e) {
  Mask below = members & f.carrier().down(e);
  below.reset(e);
  below.reset(f.bottom());
  return f.carrier().maximal_elements(below).bits();
}

void verify_tree_base(const FiniteFrame& f, const BaseSet& closed, const TreeBase& tb) {
  const Tree& t = tb.tree;
  if (tb.node_to_element[t.root()] != f.top())
    throw CrossCheckMismatch("tree base: root does not carry the top");
  std::vector<int> sorted = tb.node_to_element;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw CrossCheckMismatch("tree base: node elements not distinct");

  for (int v = 0; v < t.size(); ++v) {
    const auto& ch = t.children(v);
    for (size_t i = 0; i < ch.size(); ++i) {
      if (!f.lt(tb.node_to_element[ch[i]], tb.node_to_element[v]))
        throw CrossCheckMismatch("tree base: child not strictly below parent");
      for (size_t j = i + 1; j < ch.size(); ++j)
        if (f.meet(tb.node_to_element[ch[i]], tb.node_to_element[ch[j]]) != f.bottom())
          throw CrossCheckMismatch("tree base: siblings not disjoint");
    }
    if (!ch.empty()) {
      int acc = f.bottom();
      for (int c : ch) acc = f.join(acc, tb.node_to_element[c]);
      if (acc != tb.node_to_element[v])
        throw CrossCheckMismatch("tree base: node is not the join of its children");
    }
  }

  // levels are pairwise-disjoint families (root level is the singleton top)
  for (const Mask& level : tb.levels) {
    auto nodes = level.bits();
    for (size_t i = 0; i < nodes.size(); ++i)
      for (size_t j = i + 1; j < nodes.size(); ++j)
        if (f.meet(tb.node_to_element[nodes[i]], tb.node_to_element[nodes[j]]) != f.bottom())
          throw CrossCheckMismatch("tree base: level members not disjoint");
  }

  // every basic decomposes into nodes at its least level delta(b)
  for (int b = closed.members.first(); b != -1; b = closed.members.next(b)) {
    if (b == f.bottom()) continue;
    int delta = -1;
    for (size_t lvl = 0; lvl < tb.levels.size(); ++lvl) {
      bool strictly_below_some = false;
      for (int v = tb.levels[lvl].first(); v != -1; v = tb.levels[lvl].next(v))
        if (f.lt(b, tb.node_to_element[v])) {
          strictly_below_some = true;
          break;
        }
      if (!strictly_below_some) {
        delta = int(lvl);
        break;
      }
    }
    if (delta == -1)
      throw CrossCheckMismatch("tree base: basic " + f.label(b) + " has no settling level");
    int acc = f.bottom();
    for (int v = tb.levels[delta].first(); v != -1; v = tb.levels[delta].next(v))
      if (f.leq(tb.node_to_element[v], b)) acc = f.join(acc, tb.node_to_element[v]);
    if (acc != b)
      throw CrossCheckMismatch("tree base: basic " + f.label(b) +
                               " does not decompose at its level");
  }
}

}  // namespace

TreeBase build_tree_base(const FiniteFrame& f, const BaseSet& b) {
  BaseSet closed = chain_closure(f, b);

  std::vector<int> elements{f.top()};
  std::vector<int> parents{-1};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      if (f.size() > 1 && !is_atomic_in_base(f, closed, elements[v])) {
        std::vector<int> w = proper_decomposition(f, closed.members, elements[v]);
        int acc = f.bottom();
        for (int x : w) acc = f.join(acc, x);
        if (acc != elements[v])
          throw NoNontrivialDecompositionError(
              elements[v], "build_tree_base: basic " + f.label(elements[v]) +
                               " admits no decomposition inside the base");
        for (int x : w) {
          elements.push_back(x);
          parents.push_back(v);
          next.push_back(int(elements.size()) - 1);
        }
      }
    }
    frontier = std::move(next);
  }

  TreeBase tb;
  tb.frame = &f;
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (int e : elements) labels.push_back(f.label(e));
  tb.tree = Tree::from_parents(parents, std::move(labels));
  tb.node_to_element = std::move(elements);
  tb.levels = tb.tree.level_masks();
  verify_tree_base(f, closed, tb);
  return tb;
}

}  // namespace pointfree
