#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pointfree/poset.hpp"
#include "pointfree/tree.hpp"

using namespace pointfree;

namespace {

Poset from_pairs(int n, std::initializer_list<std::pair<int, int>> strict) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : strict) leq[a][b] = true;
  // close transitively so small fixtures stay terse
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (leq[a][k])
        for (int b = 0; b < n; ++b)
          if (leq[k][b]) leq[a][b] = true;
  return Poset::validate(leq);
}

Poset antichain(int n) { return from_pairs(n, {}); }

}  // namespace

TEST_CASE("poset validation reports the first violating triple") {
  std::vector<std::vector<bool>> not_refl{{false}};
  CHECK_THROWS_AS(Poset::validate(not_refl), PosetValidationError);

  std::vector<std::vector<bool>> not_antisym{{true, true}, {true, true}};
  try {
    Poset::validate(not_antisym);
    FAIL("expected antisymmetry failure");
  } catch (const PosetValidationError& e) {
    CHECK(e.kind == PosetValidationError::Kind::NotAntisymmetric);
  }

  // chain 0 <= m <= 1 with 0 <= 1 omitted
  std::vector<std::vector<bool>> not_trans{
      {true, true, false}, {false, true, true}, {false, false, true}};
  try {
    Poset::validate(not_trans);
    FAIL("expected transitivity failure");
  } catch (const PosetValidationError& e) {
    CHECK(e.kind == PosetValidationError::Kind::NotTransitive);
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 2);
  }

  CHECK(antichain(3).size() == 3);  // identity relation is a valid discrete order
}

TEST_CASE("upset enumeration matches the subset-filter oracle") {
  CHECK(enumerate_upsets(antichain(1)).members.size() == 2);

  Tree t1 = cantor_tree(1);
  UpsetFamily f1 = enumerate_upsets(t1.to_poset());
  CHECK(f1.members.size() == 5);

  Tree t2 = cantor_tree(2);
  UpsetFamily f2 = enumerate_upsets(t2.to_poset());
  CHECK(f2.members.size() == 26);  // 1 + 5*5 by the product recurrence
  CHECK(count_upsets(t2.to_poset(), 1000) == 26);

  for (const Poset& p : {antichain(3), cantor_tree(2).to_poset(),
                         from_pairs(4, {{0, 1}, {0, 2}, {1, 3}})}) {
    auto expect = oracle::upsets_by_filter(p);
    std::sort(expect.begin(), expect.end());
    UpsetFamily got = enumerate_upsets(p);
    REQUIRE(got.members.size() == expect.size());
    CHECK(got.members == expect);
  }
}

TEST_CASE("upset family is closed under union and intersection") {
  for (const Poset& p :
       {from_pairs(4, {{0, 1}, {0, 2}, {1, 3}}), koenig_tree(2, 3).to_poset(), antichain(4)}) {
    UpsetFamily fam = enumerate_upsets(p);
    for (const Mask& a : fam.members)
      for (const Mask& b : fam.members) {
        CHECK(fam.find(a | b) != -1);
        CHECK(fam.find(a & b) != -1);
      }
  }
  // up to the stated size-12 bound, with the checks folded into one verdict
  for (const Poset& p : {koenig_tree(2, 5).to_poset(), baire_tree(2, 2).to_poset(),
                         from_pairs(12, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 6},
                                         {6, 7}, {7, 8}, {8, 9}, {6, 10}, {10, 11}})}) {
    UpsetFamily fam = enumerate_upsets(p);
    bool closed = true;
    for (const Mask& a : fam.members)
      for (const Mask& b : fam.members)
        if (fam.find(a | b) == -1 || fam.find(a & b) == -1) closed = false;
    CHECK(closed);
  }
}

TEST_CASE("non-tree posets above the bound are rejected, trees are not") {
  Poset big_anti = antichain(22);
  CHECK_THROWS_AS(enumerate_upsets(big_anti, 1 << 20), TooLargeError);
  // a 40-node chain-tree sails through on the product recurrence
  Tree chain = chain_tree(40);
  CHECK(enumerate_upsets(chain.to_poset()).members.size() == 41);
  // a wide tree whose family itself would explode is still counted, and the
  // enumeration refuses early
  Poset wide = baire_tree(3, 3).to_poset();
  CHECK(count_upsets(wide, uint64_t(1) << 30) > (uint64_t(1) << 20));
  CHECK_THROWS_AS(enumerate_upsets(wide, 1 << 20), TooLargeError);
}

TEST_CASE("maximal chains match the exhaustive filter") {
  CHECK(maximal_chains(antichain(3)).size() == 3);
  CHECK(maximal_chains(from_pairs(3, {{0, 1}, {1, 2}})).size() == 1);
  CHECK(maximal_chains(cantor_tree(2).to_poset()).size() == 4);

  for (const Poset& p : {antichain(3), cantor_tree(2).to_poset(),
                         from_pairs(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}})}) {
    auto expect = oracle::maximal_chains_by_filter(p);
    std::sort(expect.begin(), expect.end());
    auto got = maximal_chains(p);
    CHECK(got == expect);
  }
}

TEST_CASE("every maximal chain of a rooted tree holds the root and one leaf") {
  for (int n = 1; n <= 6; ++n)
    for (const Tree& t : all_tree_shapes(n)) {
      Poset p = t.to_poset();
      for (const Mask& c : maximal_chains(p)) {
        CHECK(c.test(t.root()));
        int leaves_in_chain = 0;
        for (int v = c.first(); v != -1; v = c.next(v))
          if (t.is_leaf(v)) ++leaves_in_chain;
        CHECK(leaves_in_chain == 1);
      }
    }
}

TEST_CASE("chains_through filters by required and excluded sets") {
  Tree t = cantor_tree(1);  // root 0, leaves 1 and 2
  Poset p = t.to_poset();
  Mask excl(3);
  excl.set(2);
  auto found = chains_through(p, 1, excl);
  REQUIRE(found.size() == 1);
  CHECK(found[0].test(0));
  CHECK(found[0].test(1));
  CHECK_FALSE(found[0].test(2));

  Poset chain = from_pairs(3, {{0, 1}, {1, 2}});
  Mask top_only(3);
  top_only.set(2);
  CHECK(chains_through(chain, 1, top_only).empty());

  Poset anti = antichain(2);
  CHECK(chains_through(anti, 0, Mask(2)).size() == 1);
  CHECK_THROWS_AS(chains_through(anti, 0, Mask::full(2)), Error);
}

TEST_CASE("tree shape enumeration hits the known counts") {
  const int expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (int n = 1; n <= 9; ++n) CHECK(all_tree_shapes(n).size() == size_t(expected[n - 1]));
  // all shapes distinct
  auto shapes = all_tree_shapes(7);
  for (size_t i = 0; i < shapes.size(); ++i)
    for (size_t j = i + 1; j < shapes.size(); ++j)
      CHECK_FALSE(isomorphic(shapes[i], shapes[j]));
}
