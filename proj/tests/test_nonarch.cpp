#include <doctest.h>

#include "oracles.hpp"
#include "pointfree/nonarch.hpp"

using namespace pointfree;

namespace {

int element_of(const FiniteFrame& f, const std::string& label) {
  for (int i = 0; i < f.size(); ++i)
    if (f.label(i) == label) return i;
  REQUIRE(false);
  return -1;
}

Mask mask_of(const FiniteFrame& f, std::initializer_list<const char*> labels) {
  Mask m(f.size());
  for (const char* l : labels) m.set(element_of(f, l));
  return m;
}

}  // namespace

TEST_CASE("trichotomy classification of bases") {
  FiniteFrame p3 = FiniteFrame::powerset(3);

  Mask singletons = p3.atoms();
  Mask with_top = singletons;
  with_top.set(p3.top());
  CHECK(check_nonarch_base(p3, make_base(p3, with_top)).holds);

  // the classic failing family: classification proceeds, the base-law gap is
  // reported separately
  Mask bad = mask_of(p3, {"{1}", "{1,2}", "{2,3}"});
  TrichotomyReport rep = check_nonarch_base(p3, bad);
  CHECK_FALSE(rep.holds);
  CHECK_FALSE(rep.base_law);
  REQUIRE(rep.violating_pair.has_value());
  CHECK(rep.violating_pair->first == element_of(p3, "{1,2}"));
  CHECK(rep.violating_pair->second == element_of(p3, "{2,3}"));

  FiniteFrame c3 = FiniteFrame::chain(3);
  Mask m1(3);
  m1.set(1);
  m1.set(2);
  CHECK(check_nonarch_base(c3, make_base(c3, m1)).holds);
  CHECK_FALSE(is_zero_dimensional(c3));  // the flagged divergence
}

TEST_CASE("chain closure is the identity on finite bases and re-verifies") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  Mask atoms = p3.atoms();
  atoms.set(p3.top());
  BaseSet closed = chain_closure(p3, make_base(p3, atoms));
  CHECK(closed.members == atoms);

  // the {1} < {1,2} plus disjoint {3} family, in its generated subframe
  FiniteFrame sub = FiniteFrame::from_mask_family(std::vector<Mask>{
      Mask(3), Mask::singleton(3, 0),
      [] {
        Mask m(3);
        m.set(0);
        m.set(1);
        return m;
      }(),
      Mask::singleton(3, 2),
      [] {
        Mask m(3);
        m.set(0);
        m.set(2);
        return m;
      }(),
      Mask::full(3)});
  Mask base(sub.size());
  for (const char* l : {"{0}", "{0,1}", "{2}"}) base.set(element_of(sub, l));
  BaseSet closed2 = chain_closure(sub, make_base(sub, base));
  CHECK(closed2.members == base);  // the chain join {0,1} is already present

  // a non-archimedean failure is refused
  Mask bad = mask_of(p3, {"{1}", "{2}", "{3}", "{1,2}", "{2,3}"});
  CHECK_THROWS_AS(chain_closure(p3, BaseSet{&p3, bad}), NotNonArchError);
}

TEST_CASE("canonical decomposition into maximal disjoint basics") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  Mask base = p3.atoms();
  base.set(element_of(p3, "{1,2}"));
  BaseSet b = make_base(p3, base);

  CHECK(canonical_decomposition(p3, b, p3.bottom()).empty());
  auto top_parts = canonical_decomposition(p3, b, p3.top());
  REQUIRE(top_parts.size() == 2);
  CHECK(top_parts[0] == element_of(p3, "{1,2}"));
  CHECK(top_parts[1] == element_of(p3, "{3}"));

  auto self_part = canonical_decomposition(p3, b, element_of(p3, "{1,2}"));
  CHECK(self_part == std::vector<int>{element_of(p3, "{1,2}")});

  // every element of every base decomposes disjointly with the right join
  for (int a = 0; a < p3.size(); ++a) {
    auto parts = canonical_decomposition(p3, b, a);
    int acc = p3.bottom();
    for (size_t i = 0; i < parts.size(); ++i) {
      acc = p3.join(acc, parts[i]);
      for (size_t j = i + 1; j < parts.size(); ++j)
        CHECK(p3.meet(parts[i], parts[j]) == p3.bottom());
    }
    CHECK(acc == a);
  }
}

TEST_CASE("meet classification of base subsets") {
  FiniteFrame p4 = FiniteFrame::powerset(4);
  Mask base = p4.atoms();
  int b123 = -1, b12 = -1;
  for (int i = 0; i < p4.size(); ++i) {
    if (p4.label(i) == "{1,2,3}") b123 = i;
    if (p4.label(i) == "{1,2}") b12 = i;
  }
  base.set(b123);
  base.set(b12);
  base.set(p4.top());
  BaseSet b = make_base(p4, base);

  Mask disjoint_pair(p4.size());
  disjoint_pair.set(element_of(p4, "{1}"));
  disjoint_pair.set(element_of(p4, "{2}"));
  CHECK(ortho_classify(p4, b, disjoint_pair).outcome == OrthoOutcome::MeetZero);

  Mask one_atom(p4.size());
  one_atom.set(element_of(p4, "{1}"));
  CHECK(ortho_classify(p4, b, one_atom).outcome == OrthoOutcome::IntervalSimple);

  Mask nested(p4.size());
  nested.set(b123);
  nested.set(b12);
  OrthoReport rep = ortho_classify(p4, b, nested);
  CHECK(rep.meet == b12);
  CHECK(rep.outcome == OrthoOutcome::Complemented);
  REQUIRE(rep.complement_witness.has_value());
  CHECK(p4.label(*rep.complement_witness) == "{3,4}");

  // the four-chain pins the gap in the frame-complemented reading: the meet
  // is nonzero, the interval is fat, no complement exists -- but the meet is
  // still a base member
  FiniteFrame c4 = FiniteFrame::chain(4);
  Mask cbase = Mask::full(4);
  cbase.reset(c4.bottom());
  Mask middle(4);
  middle.set(2);
  OrthoReport gap = ortho_classify(c4, make_base(c4, cbase), middle);
  CHECK(gap.outcome == OrthoOutcome::Unclassified);
  CHECK(gap.meet_in_base);
}

TEST_CASE("tree base construction") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  Mask base = p3.atoms();
  base.set(element_of(p3, "{1,2}"));
  base.set(p3.top());
  TreeBase tb = build_tree_base(p3, make_base(p3, base));

  REQUIRE(tb.tree.size() == 5);
  CHECK(tb.node_to_element[tb.tree.root()] == p3.top());
  const auto& top_children = tb.tree.children(tb.tree.root());
  REQUIRE(top_children.size() == 2);
  std::vector<std::string> labels;
  for (int c : top_children) labels.push_back(p3.label(tb.node_to_element[c]));
  CHECK(((labels[0] == "{1,2}" && labels[1] == "{3}") ||
         (labels[0] == "{3}" && labels[1] == "{1,2}")));
  for (int c : top_children)
    if (p3.label(tb.node_to_element[c]) == "{1,2}") CHECK(tb.tree.children(c).size() == 2);

  // powerset of two atoms: a depth-1 binary tree
  FiniteFrame p2 = FiniteFrame::powerset(2);
  Mask b2 = p2.atoms();
  b2.set(p2.top());
  TreeBase tb2 = build_tree_base(p2, make_base(p2, b2));
  CHECK(isomorphic(tb2.tree, cantor_tree(1)));

  // one-element frame: a single node
  FiniteFrame one = FiniteFrame::powerset(0);
  TreeBase tb1 = build_tree_base(one, make_base(one, Mask::full(1)));
  CHECK(tb1.tree.size() == 1);

  // the chain pathology surfaces instead of fabricating children
  FiniteFrame c3 = FiniteFrame::chain(3);
  Mask cbase(3);
  cbase.set(1);
  cbase.set(2);
  CHECK_THROWS_AS(build_tree_base(c3, make_base(c3, cbase)),
                  NoNontrivialDecompositionError);
}

TEST_CASE("complemented-below lemma holds with the nonzero guard") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  Mask base = p3.atoms();
  base.set(p3.top());
  Mask comp = p3.complemented_elements();
  for (int b = base.first(); b != -1; b = base.next(b))
    for (int c = comp.first(); c != -1; c = comp.next(c))
      if (c != p3.bottom() && p3.leq(c, b)) CHECK(p3.is_complemented(b));
}
