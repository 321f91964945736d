#include <doctest.h>

#include "oracles.hpp"
#include "pointfree/frame.hpp"
#include "pointfree/nonarch.hpp"

using namespace pointfree;

namespace {

int element_of(const FiniteFrame& f, const std::string& label) {
  for (int i = 0; i < f.size(); ++i)
    if (f.label(i) == label) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("heyting implication agrees with the scan oracle") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  FiniteFrame c3 = FiniteFrame::chain(3);

  for (const FiniteFrame* f : {&p3, &c3})
    for (int a = 0; a < f->size(); ++a) {
      CHECK(f->heyting(f->top(), a) == a);
      for (int b = 0; b < f->size(); ++b)
        CHECK(f->heyting(a, b) == oracle::heyting_by_scan(*f, a, b));
    }

  CHECK(c3.heyting(1, 0) == 0);  // chain 0<m<1: m -> 0 is 0
  int a12 = element_of(p3, "{1,2}"), a23 = element_of(p3, "{2,3}");
  CHECK(p3.heyting(a12, a23) == a23);  // complement-union in Boolean frames
}

TEST_CASE("negation and complements") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  FiniteFrame c3 = FiniteFrame::chain(3);

  CHECK(p3.negation(p3.bottom()) == p3.top());
  CHECK(p3.negation(p3.top()) == p3.bottom());
  CHECK(p3.negation(element_of(p3, "{1}")) == element_of(p3, "{2,3}"));
  CHECK(c3.negation(1) == 0);

  CHECK(c3.is_complemented(c3.bottom()));
  CHECK(c3.is_complemented(c3.top()));
  CHECK_FALSE(c3.is_complemented(1));
  for (int a = 0; a < p3.size(); ++a) CHECK(p3.is_complemented(a));

  // antitone and triple-negation laws
  for (const FiniteFrame* f : {&p3, &c3})
    for (int a = 0; a < f->size(); ++a) {
      CHECK(f->negation(f->negation(f->negation(a))) == f->negation(a));
      for (int b = 0; b < f->size(); ++b)
        if (f->leq(a, b)) CHECK(f->leq(f->negation(b), f->negation(a)));
    }
}

TEST_CASE("zero-dimensionality via the complemented base") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  CHECK(is_zero_dimensional(p3));
  FiniteFrame c3 = FiniteFrame::chain(3);
  CHECK_FALSE(is_zero_dimensional(c3));
  // branch-space frames of finite trees are leaf powersets, hence zero-dim
  FiniteFrame opens = FiniteFrame::powerset(2);
  CHECK(is_zero_dimensional(opens));
}

TEST_CASE("rather below and completely below") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  for (int a = 0; a < p3.size(); ++a) CHECK(p3.rather_below(a, a));
  FiniteFrame c3 = FiniteFrame::chain(3);
  CHECK_FALSE(c3.rather_below(1, 1));

  // on Boolean frames the interpolative core collapses to the order
  auto rel = p3.completely_below_relation();
  for (int a = 0; a < p3.size(); ++a)
    for (int b = 0; b < p3.size(); ++b) CHECK(rel[a].test(b) == p3.leq(a, b));
}

TEST_CASE("separation properties") {
  SeparationReport p = separations(FiniteFrame::powerset(3));
  CHECK(p.zero_dimensional);
  CHECK(p.regular);
  CHECK(p.completely_regular);
  CHECK(p.fit);

  SeparationReport c = separations(FiniteFrame::chain(3));
  CHECK_FALSE(c.regular);
  CHECK_FALSE(c.zero_dimensional);
}

TEST_CASE("point space three ways") {
  CHECK(points(FiniteFrame::powerset(3)).size() == 3);
  CHECK(points(FiniteFrame::chain(3)).size() == 2);

  // Alexandroff frame of a poset has one point per element
  for (int n = 1; n <= 5; ++n)
    for (const Tree& t : all_tree_shapes(n)) {
      UpsetFamily fam = enumerate_upsets(t.to_poset());
      FiniteFrame alex = FiniteFrame::alexandroff(fam);
      CHECK(points(alex).size() == size_t(t.size()));
    }

  // trivial frame has no morphism onto the two-element frame
  CHECK(points(FiniteFrame::powerset(0)).empty());
}

TEST_CASE("spatial reflection is a frame morphism and injective on these") {
  for (FiniteFrame f : {FiniteFrame::powerset(3), FiniteFrame::chain(3), FiniteFrame::powerset(0)}) {
    SpatialReflection r = spatial_reflection(f);
    CHECK(r.morphism);
    CHECK(r.injective);
  }
}

TEST_CASE("base law checking") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  Mask atoms = p3.atoms();
  CHECK(p3.is_base(atoms));
  Mask missing = atoms;
  missing.reset(atoms.first());
  int bad = -1;
  CHECK_FALSE(p3.is_base(missing, &bad));
  CHECK(bad != -1);
  CHECK_THROWS_AS(make_base(p3, missing), NotABaseError);
}

TEST_CASE("point/tree compatibility for a small tree base") {
  FiniteFrame p2 = FiniteFrame::powerset(2);
  Mask base = p2.atoms();
  base.set(p2.top());
  TreeBase tb = build_tree_base(p2, make_base(p2, base));
  PointTreeReport rep = check_point_tree(p2, tb);
  CHECK(rep.at_most_one_per_level);
  CHECK(rep.order_isomorphism);
  CHECK(rep.basis_of_canonical_topology);

  // singleton frame: vacuous pass
  FiniteFrame one = FiniteFrame::powerset(0);
  Mask only = Mask::full(1);
  TreeBase tb1 = build_tree_base(one, make_base(one, only));
  CHECK(check_point_tree(one, tb1).ok());
}
