#pragma once

#include <optional>
#include <vector>

#include "pointfree/frame.hpp"
#include "pointfree/tree.hpp"

namespace pointfree {

enum class PairClass { Disjoint, LeftBelow, RightBelow, Equal, Incomparable };

// Pairwise trichotomy classification of a base candidate: each pair must be
// disjoint, comparable, or equal for the family to be non-archimedean. A
// base-law failure is reported separately rather than aborting the
// classification.
struct TrichotomyReport {
  bool holds = false;  // trichotomy across all pairs
  std::optional<std::pair<int, int>> violating_pair;
  // classification[i][j] for the i-th, j-th base members (by ascending index)
  std::vector<int> member_order;
  std::vector<std::vector<PairClass>> classification;
  bool base_law = false;
  int base_failure = -1;  // first element the members cannot rebuild
  bool ok() const { return holds && base_law; }
};

PairClass classify_pair(const FiniteFrame& f, int a, int b);

TrichotomyReport check_nonarch_base(const FiniteFrame& f, const Mask& members);
inline TrichotomyReport check_nonarch_base(const FiniteFrame& f, const BaseSet& b) {
  return check_nonarch_base(f, b.members);
}

// {join of C | C a nonempty chain in the base}. On a finite carrier every
// chain join is the chain's maximum, so the closure equals the base itself;
// the function still verifies the result is a non-archimedean base closed
// under chain suprema (NotNonArchError otherwise).
BaseSet chain_closure(const FiniteFrame& f, const BaseSet& b);

// Maximal members of the base below `a` (zero excluded): pairwise disjoint
// with join exactly `a`. Requires a chain-closed non-archimedean base.
std::vector<int> canonical_decomposition(const FiniteFrame& f, const BaseSet& b, int a);

// Same, for a base already known to be chain-closed and non-archimedean.
std::vector<int> canonical_decomposition_closed(const FiniteFrame& f, const Mask& members,
                                                int a);

enum class OrthoOutcome { MeetZero, IntervalSimple, Complemented, Unclassified };

// Classification of the meet of a base subset, checked in the listed order.
// `Unclassified` records a finite counterexample to the trichotomy when the
// complemented case is read in the frame; `meet_in_base` reports the
// always-true membership reading alongside.
struct OrthoReport {
  OrthoOutcome outcome = OrthoOutcome::Unclassified;
  int meet = -1;
  std::optional<int> complement_witness;
  bool meet_in_base = false;
};

OrthoReport ortho_classify(const FiniteFrame& f, const BaseSet& b, const Mask& subset);

// Tree base: the root carries the frame top, each level is the canonical
// decomposition of the previous one, descent in the tree is descent in the
// frame order reversed.
struct TreeBase {
  const FiniteFrame* frame = nullptr;
  Tree tree;
  std::vector<int> node_to_element;
  std::vector<Mask> levels;  // node masks per depth, root level included
};

// Builds the tree base by the level recursion: children of a non-atomic node
// are the maximal proper basics below it. Throws
// NoNontrivialDecompositionError when a non-atomic basic has no proper
// decomposition inside the base. All TreeBase invariants are re-verified
// post-hoc (CrossCheckMismatch on violation).
TreeBase build_tree_base(const FiniteFrame& f, const BaseSet& b);

// True when no basic lies strictly between bottom and `a`.
bool is_atomic_in_base(const FiniteFrame& f, const BaseSet& b, int a);

}  // namespace pointfree
