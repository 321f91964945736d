#pragma once

#include <random>
#include <string>
#include <vector>

#include "pointfree/frame.hpp"
#include "pointfree/tree.hpp"

namespace pointfree {

// One frame with the non-archimedean bases the corpus knows for it.
struct FrameInstance {
  std::string name;
  FiniteFrame frame;
  std::vector<Mask> bases;
};

struct TreeInstance {
  std::string name;
  Tree tree;
};

struct CorpusOptions {
  uint64_t seed = 0;
  int max_size = 64;        // frame carrier cap
  int max_tree_nodes = 7;   // exhaustive shape sweep cap
  int random_trees = 24;    // seeded random trees up to 15 nodes
  int gbi_tree_nodes = 9;   // bar-induction sweep cap for verify-paper
};

// Deterministic test corpus: powerset frames (atom count <= 4, plus 5 for
// base sampling), chains <= 5, exhaustive tree shapes, Alexandroff and
// branch-space frames of the small trees, random trees, coset trees for
// p in {2,3} up to depth 4.
struct Corpus {
  std::vector<FrameInstance> frames;
  std::vector<TreeInstance> trees;
};

Corpus build_corpus(const CorpusOptions& opt);

// Random laminar refinements over a powerset frame's atoms: singletons plus
// block joins plus the top, always a non-archimedean base.
std::vector<Mask> random_laminar_bases(const FiniteFrame& f, int count, std::mt19937_64& rng);

// Knowingly awkward fixture: the three-chain 0 < m < 1 with base {m, 1} is
// non-archimedean per the trichotomy yet not zero-dimensional.
FrameInstance chain_counterexample();

}  // namespace pointfree
