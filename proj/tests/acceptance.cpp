// Acceptance suite: one case per criterion, one pass/fail line each.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "pointfree/branch.hpp"
#include "pointfree/nonarch.hpp"
#include "pointfree/verify.hpp"

using namespace pointfree;

namespace {

const Corpus& corpus() {
  static Corpus c = build_corpus(CorpusOptions{});
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void announce(int n, const char* text, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %02d: %s — %s\n", pass ? "PASS" : "FAIL", n, text,
              detail.c_str());
  std::fflush(stdout);
}

}  // namespace

TEST_CASE("criterion 1: frame laws and heyting adjunction, exhaustive, under 10s") {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord r = verify_frame_laws(corpus());
  double secs = seconds_since(t0);
  bool ok = r.pass && secs < 10.0;
  announce(1, "frame laws + adjunction", ok,
           r.witness + " in " + std::to_string(secs) + "s");
  CHECK(r.pass);
  CHECK(secs < 10.0);
}

TEST_CASE("criterion 2: point-space triple cross-check") {
  CheckRecord r = verify_point_triple(corpus());
  announce(2, "points three ways", r.pass, r.witness);
  CHECK(r.pass);
}

TEST_CASE("criterion 3: chain closure over corpus plus 1000 random bases") {
  CheckRecord r = verify_chain_closure_law(corpus(), 0, 1000);
  announce(3, "chain closure", r.pass, r.witness);
  CHECK(r.pass);
}

TEST_CASE("criterion 4: canonical decomposition everywhere") {
  CheckRecord r = verify_canonical_decomposition(corpus());
  announce(4, "canonical decomposition", r.pass, r.witness);
  CHECK(r.pass);
}

TEST_CASE("criterion 5: tree base, quotient presentation, isomorphism loop") {
  CheckRecord r = verify_tree_base_loop(corpus());
  announce(5, "tree-base loop", r.pass, r.witness);
  CHECK(r.pass);
}

TEST_CASE("criterion 6: bar-induction conditions on all trees to 12 nodes, under 5min") {
  // The derivative absorbs leaves vacuously while ker does not, so the
  // stated table equality der^inf = ker = ler is refutable on every finite
  // tree (witness: the empty upset) and the four conditions cannot agree.
  // The criterion is asserted as stated and carries that divergence.
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord r = verify_branch_induction(corpus(), 12, true);
  double secs = seconds_since(t0);
  announce(6, "bar-induction equivalences", r.pass && secs < 300.0,
           r.witness + " in " + std::to_string(secs) + "s");
  CHECK(secs < 300.0);
  CHECK(r.pass);
}

TEST_CASE("criterion 7: derivative ranks") {
  CheckRecord r = verify_cb_ranks();
  announce(7, "derivative ranks", r.pass, r.witness);
  CHECK(r.pass);
}

TEST_CASE("criterion 8: every nucleus image keeps a non-archimedean base") {
  CheckRecord r = verify_quotients(corpus(), 16);
  announce(8, "quotients stay non-archimedean", r.pass, r.witness);
  CHECK(r.pass);
}

TEST_CASE("criterion 9: ball trichotomy oracle and coset-tree round trip") {
  CheckRecord tri = verify_padic_trichotomy();
  CheckRecord rel = verify_padic_relations();
  CheckRecord rt = verify_padic_roundtrip();
  bool ok = tri.pass && rel.pass && rt.pass;
  announce(9, "exact ball algebra", ok,
           tri.witness + "; " + rel.witness + "; " + rt.witness);
  CHECK(tri.pass);
  CHECK(rel.pass);
  CHECK(rt.pass);
}

TEST_CASE("criterion 10: the known counterexample is reported, not hidden") {
  CheckRecord r = verify_zero_dim_counterexample();
  announce(10, "zero-dimensionality counterexample", r.pass, r.witness);
  CHECK(r.pass);
}

TEST_CASE("criterion 11: spatial reflection and point/tree reconstruction") {
  CheckRecord r = verify_spatial_point_tree(corpus());
  CheckRecord b = verify_branch_points(corpus());
  bool ok = r.pass && b.pass;
  announce(11, "point-space reconstruction", ok, r.witness + "; " + b.witness);
  CHECK(r.pass);
  CHECK(b.pass);
}
