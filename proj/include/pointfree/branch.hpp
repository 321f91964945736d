#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pointfree/frame.hpp"
#include "pointfree/nonarch.hpp"
#include "pointfree/nucleus.hpp"
#include "pointfree/tree.hpp"

namespace pointfree {

/**
 * Branch space of a finite rooted tree: branches are the maximal chains
 * (root-to-leaf paths), the topology is the image of the Alexandroff upsets
 * under the branch-hitting map, which for finite trees is the full powerset
 * of the branch set (leaves and branches correspond one-to-one; both facts
 * are re-verified at construction).
 */
struct BranchSet {
  Tree tree;                     // owned copy
  std::vector<Mask> branches;    // node masks, canonical order
  std::vector<Mask> basic_open;  // node -> branch mask (branches through it)
  std::vector<Mask> opens;       // branch masks, canonical order
  std::unordered_map<Mask, int, MaskHash> open_index;

  int find_open(const Mask& m) const {
    auto it = open_index.find(m);
    return it == open_index.end() ? -1 : it->second;
  }
};

BranchSet branch_space(const Tree& t, int max_branches = 20);

// Branch-hitting map on upsets and its right adjoint on opens.
Mask k_upper(const BranchSet& bs, const Mask& upset);
Mask k_lower(const BranchSet& bs, const Mask& open_set);  // NotOpenError off the topology

// One-step operators on a single upset.
Mask ker_apply(const BranchSet& bs, const Mask& upset);
Mask der_apply(const Tree& t, const Mask& upset);
Mask der_closure_apply(const Tree& t, const Mask& upset);
// ler for the closed nucleus (branch-set u) \/ - on the opens frame;
// u empty = ker, u full = constant top.
Mask ler_apply(const BranchSet& bs, const Mask& closed_u, const Mask& upset);

// Least n with der^n(empty) = der^(n+1)(empty).
int cb_rank(const Tree& t);

// Operator tabulated over an enumerated upset family.
struct OperatorTable {
  const UpsetFamily* family = nullptr;
  std::vector<int> map;  // family index -> family index
};

OperatorTable tabulate(const UpsetFamily& fam, const std::function<Mask(const Mask&)>& op);
OperatorTable ker_table(const BranchSet& bs, const UpsetFamily& fam);
OperatorTable der_table(const Tree& t, const UpsetFamily& fam);
OperatorTable der_closure_table(const Tree& t, const UpsetFamily& fam);
OperatorTable ler_closed_table(const BranchSet& bs, const UpsetFamily& fam, const Mask& closed_u);

// Same operators as closure maps on the materialized Alexandroff frame
// (element i of the frame corresponds to fam.members[i]).
ClosureMap to_closure_map(const FiniteFrame& alexandroff_frame, const OperatorTable& table);

inline ClosureMap ker_nucleus(const BranchSet& bs, const UpsetFamily& fam,
                              const FiniteFrame& alexandroff_frame) {
  return to_closure_map(alexandroff_frame, ker_table(bs, fam));
}
inline ClosureMap der_map(const Tree& t, const UpsetFamily& fam,
                          const FiniteFrame& alexandroff_frame) {
  return to_closure_map(alexandroff_frame, der_table(t, fam));
}

// Boolean frame of opens; element i corresponds to bs.opens[i].
FiniteFrame opens_frame(const BranchSet& bs);

// ler for an arbitrary nucleus j on the opens frame: k_lower . j . k_upper.
OperatorTable ler_table(const BranchSet& bs, const UpsetFamily& fam, const ClosureMap& j_on_opens);

inline ClosureMap ler_nucleus(const BranchSet& bs, const UpsetFamily& fam,
                              const FiniteFrame& alexandroff_frame,
                              const ClosureMap& j_on_opens) {
  return to_closure_map(alexandroff_frame, ler_table(bs, fam, j_on_opens));
}

// Coverage relation between upsets and nodes; covers[i] is the node set
// related to fam.members[i].
struct CoverageRelation {
  const Tree* tree = nullptr;
  const UpsetFamily* family = nullptr;
  std::vector<Mask> covers;
};

CoverageRelation coverage_from_operator(const Tree& t, const UpsetFamily& fam,
                                        const std::function<Mask(const Mask&)>& op);

struct CoverageReport {
  bool upset_rule = true, infl = true, mono = true, stability = true, idem = true;
  std::string violation;
  bool all() const { return upset_rule && infl && mono && stability && idem; }
};

CoverageReport coverage_check(const CoverageRelation& c);

// Branch-induction report: (i) der-fixed upsets are ler-fixed, (ii) the
// derivative closure, ker and ler agree as tables on every upset, (iii) the
// restatement of (i) on the collected fixed family, (iv) the der-fixed
// quotient frame is spatial. The four truth values are reported as found.
struct GbiReport {
  bool gbi = false;
  bool tables_equal = false;
  bool fixed_family = false;
  bool quotient_spatial = false;
  std::string witness;  // first table divergence, when any
  bool agree() const {
    return gbi == tables_equal && tables_equal == fixed_family &&
           fixed_family == quotient_spatial;
  }
  bool all_true() const { return gbi && tables_equal && fixed_family && quotient_spatial; }
};

GbiReport gbi_check(const Tree& t, const BranchSet& bs, const UpsetFamily& fam,
                    const Mask& closed_u);

// Quotient presentation of a frame from its tree base: eta maps each open to
// the join of the node elements whose basic open it contains.
struct QuotientPresentation {
  std::vector<int> eta;   // open index -> frame element
  std::vector<int> beta;  // frame element -> open index (right adjoint)
  std::vector<int> non;   // open index -> open index (beta after eta)
  bool surjective = false;
  bool morphism = false;
  bool injective = false;
  bool nodes_recovered = false;       // eta(U_node) = node element
  bool beta_is_right_adjoint = false;
  bool fixed_iso = false;             // non-fixed opens are order-isomorphic to the frame
  bool ok() const {
    return surjective && morphism && nodes_recovered && beta_is_right_adjoint && fixed_iso;
  }
};

QuotientPresentation quotient_presentation(const FiniteFrame& f, const TreeBase& tb,
                                           const BranchSet& bs);

// Non-redundant level representation of a frame element along the tree base:
// per level, the basics below `a` not below any earlier chosen basic.
// Level indices refer to decomposition levels (the root level is level -1 and
// only appears for the single-node tree, where the root carries the element).
struct LevelDecomposition {
  std::vector<std::pair<int, std::vector<int>>> levels;  // (level, elements), empties removed
  int join = -1;
};

LevelDecomposition level_decomposition(const FiniteFrame& f, const TreeBase& tb, int a);

// The point induced by a maximal chain of the tree base: a |-> 1 iff some
// chain node's element sits below a.
Point branch_point(const FiniteFrame& f, const TreeBase& tb, const Mask& chain_nodes);

// The assembled branch-to-point map with its continuity/bijectivity report.
struct BranchPointMap {
  std::vector<Point> per_branch;
  bool all_points = true;    // every branch induces a frame morphism
  bool continuous = true;    // preimages of node basics are open
  bool injective = true;
  bool surjective = true;    // onto pt(f)
};

BranchPointMap branch_point_map(const FiniteFrame& f, const TreeBase& tb, const BranchSet& bs);

}  // namespace pointfree
