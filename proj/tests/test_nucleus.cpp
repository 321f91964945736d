#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pointfree/branch.hpp"
#include "pointfree/nonarch.hpp"
#include "pointfree/nucleus.hpp"

using namespace pointfree;

TEST_CASE("nucleus axioms") {
  FiniteFrame p2 = FiniteFrame::powerset(2);
  CHECK(is_nucleus(identity_map(p2)).ok);
  CHECK(is_nucleus(constant_top_map(p2)).ok);

  int u = -1;
  for (int i = 0; i < p2.size(); ++i)
    if (p2.label(i) == "{1}") u = i;
  CHECK(is_nucleus(closed_nucleus(p2, u)).ok);
  CHECK(is_nucleus(open_nucleus(p2, u)).ok);

  // inflationary-but-not-idempotent map: push atoms up one step on a chain
  FiniteFrame c4 = FiniteFrame::chain(4);
  std::vector<int> t{1, 2, 3, 3};
  ClosureMap step = make_closure_map(c4, t);
  NucleusCheck chk = is_nucleus(step);
  CHECK_FALSE(chk.ok);
  CHECK(chk.violated == "idempotent");
}

TEST_CASE("prenucleus closure iteration counts") {
  FiniteFrame p2 = FiniteFrame::powerset(2);
  int iters = -1;
  ClosureMap cid = prenucleus_closure(identity_map(p2), &iters);
  CHECK(cid == identity_map(p2));
  CHECK(iters == 0);

  int u = 1;
  ClosureMap j = closed_nucleus(p2, u);
  ClosureMap cj = prenucleus_closure(j, &iters);
  CHECK(cj == j);
  CHECK(iters <= 1);

  // derivative on the depth-2 binary tree frame settles after three passes
  Tree t = cantor_tree(2);
  UpsetFamily fam = enumerate_upsets(t.to_poset());
  REQUIRE(fam.members.size() == 26);
  FiniteFrame alex = FiniteFrame::alexandroff(fam);
  ClosureMap der = der_map(t, fam, alex);
  CHECK(is_prenucleus(der));
  ClosureMap closed = prenucleus_closure(der, &iters);
  CHECK(iters == 3);
  CHECK(is_nucleus(closed).ok);

  std::vector<int> bad{3, 1, 2, 3};  // inflationary but not monotone on the 4-chain
  CHECK_THROWS_AS(make_closure_map(FiniteFrame::chain(4), bad), Error);

  // monotone and inflationary yet failing the meet law: not a prenucleus
  FiniteFrame sq = FiniteFrame::powerset(2);
  std::vector<int> skew(sq.size());
  for (int a = 0; a < sq.size(); ++a) skew[a] = a;
  skew[1] = sq.top();  // {1} jumps to the top, {2} stays
  ClosureMap bad_meet = make_closure_map(sq, skew);
  CHECK_FALSE(is_prenucleus(bad_meet));
  CHECK_THROWS_AS(prenucleus_closure(bad_meet), NotPrenucleusError);
}

TEST_CASE("quotient frames") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  QuotientFrame ident = quotient(p3, identity_map(p3));
  CHECK(ident.frame.size() == p3.size());

  QuotientFrame collapsed = quotient(p3, constant_top_map(p3));
  CHECK(collapsed.frame.size() == 1);

  int u = -1;
  for (int i = 0; i < p3.size(); ++i)
    if (p3.label(i) == "{1}") u = i;
  QuotientFrame q = quotient(p3, closed_nucleus(p3, u));
  CHECK(q.frame.size() == 4);  // the sets containing 1, a copy of powerset {2,3}
  CHECK(is_zero_dimensional(q.frame));

  FiniteFrame c4 = FiniteFrame::chain(4);
  std::vector<int> not_idem{1, 2, 3, 3};
  CHECK_THROWS_AS(quotient(c4, ClosureMap{&c4, not_idem}), NotNucleusError);
}

TEST_CASE("nucleus enumeration matches the raw self-map oracle") {
  FiniteFrame two = FiniteFrame::powerset(1);
  auto n2 = enumerate_nuclei(two);
  CHECK(n2.size() == 2);
  CHECK(n2.size() == oracle::count_nuclei_by_scan(two));

  FiniteFrame c3 = FiniteFrame::chain(3);
  auto n3 = enumerate_nuclei(c3);
  CHECK(n3.size() == oracle::count_nuclei_by_scan(c3));
  CHECK(n3.size() == 4);  // frozen from the oracle

  FiniteFrame p2 = FiniteFrame::powerset(2);
  auto np2 = enumerate_nuclei(p2);
  CHECK(np2.size() == oracle::count_nuclei_by_scan(p2));

  // closed and open nuclei all appear
  for (const FiniteFrame* f : {&c3, &p2})
    for (int u = 0; u < f->size(); ++u) {
      auto all = enumerate_nuclei(*f);
      CHECK(std::binary_search(all.begin(), all.end(), closed_nucleus(*f, u)));
      CHECK(std::binary_search(all.begin(), all.end(), open_nucleus(*f, u)));
    }

  CHECK_THROWS_AS(enumerate_nuclei(FiniteFrame::powerset(5), 16), TooLargeError);
}

TEST_CASE("assembly of a small frame is a frame") {
  for (FiniteFrame f : {FiniteFrame::powerset(2), FiniteFrame::chain(4)}) {
    auto nuclei = enumerate_nuclei(f);
    AssemblyReport rep = verify_assembly(f, nuclei);
    CHECK(rep.closed_under_meet);
    CHECK(rep.closed_under_join);
    CHECK(rep.distributive);
    CHECK(rep.exhaustive);
  }
}

TEST_CASE("quotients of a non-archimedean frame keep a non-archimedean base") {
  FiniteFrame p3 = FiniteFrame::powerset(3);
  Mask base = p3.atoms();
  base.set(p3.top());
  auto nuclei = enumerate_nuclei(p3);
  auto verdicts = verify_quot(p3, make_base(p3, base), nuclei);
  CHECK(verdicts.size() == nuclei.size());
  for (const auto& v : verdicts) {
    CHECK(v.base_law);
    CHECK(v.trichotomy);
  }
}
