#pragma once

#include <string>
#include <vector>

#include "pointfree/frame.hpp"

namespace pointfree {

// Monotone inflationary self-map on a frame carrier, stored as an index
// table. Candidate nuclei and prenuclei live here; idempotence and the meet
// law are what is_nucleus decides, not construction invariants.
struct ClosureMap {
  const FiniteFrame* frame = nullptr;
  std::vector<int> table;

  int apply(int a) const { return table[a]; }
  bool operator==(const ClosureMap& o) const { return table == o.table; }
  bool operator<(const ClosureMap& o) const { return table < o.table; }
};

// Checks monotone + inflationary; throws on violation.
ClosureMap make_closure_map(const FiniteFrame& f, std::vector<int> table);

ClosureMap identity_map(const FiniteFrame& f);
ClosureMap constant_top_map(const FiniteFrame& f);
ClosureMap closed_nucleus(const FiniteFrame& f, int u);  // a |-> u \/ a
ClosureMap open_nucleus(const FiniteFrame& f, int u);    // a |-> u -> a

struct NucleusCheck {
  bool ok = false;
  std::string violated;  // first violated axiom: monotone, inflationary, meet, idempotent
  int witness_a = -1, witness_b = -1;
};

NucleusCheck is_nucleus(const ClosureMap& c);
bool is_prenucleus(const ClosureMap& c);  // monotone, inflationary, meet law

// Least nucleus above a prenucleus: elementwise iteration to the fixpoint.
// Throws NotPrenucleusError when the input fails the prenucleus laws.
ClosureMap prenucleus_closure(const ClosureMap& c, int* iterations = nullptr);

// Pointwise meet of nuclei (again a nucleus) and the assembly join
// (closure of the pointwise join).
ClosureMap nucleus_meet(const ClosureMap& a, const ClosureMap& b);
ClosureMap nucleus_join(const ClosureMap& a, const ClosureMap& b);

// Quotient frame on the fixed elements of a nucleus; joins are recomputed
// through the nucleus, meets are inherited.
struct QuotientFrame {
  const FiniteFrame* parent = nullptr;
  ClosureMap nucleus;
  Mask fixed;
  FiniteFrame frame;               // frame structure on the fixed elements
  std::vector<int> to_parent;      // quotient index -> parent element
  std::vector<int> project;        // parent element -> quotient index (j*)

  int project_of(int parent_elem) const { return project[parent_elem]; }
};

// Builds the quotient and verifies that the projection is a surjective frame
// morphism. Throws NotNucleusError when j is not a nucleus.
QuotientFrame quotient(const FiniteFrame& f, const ClosureMap& j);

// All nuclei on the frame in canonical table order. Enumerates candidate
// fixed sets (meet-closed, Heyting-absorbing subsets containing the top) and
// verifies each induced map. Carrier sizes above the bound are rejected.
std::vector<ClosureMap> enumerate_nuclei(const FiniteFrame& f, int bound = 16);

// Frame-law verification of the assembly on an enumerated nucleus set:
// meets/joins stay inside, and binary distributivity holds on all triples
// when the set is small (<= triple_bound), on a seeded sample otherwise.
struct AssemblyReport {
  bool closed_under_meet = true;
  bool closed_under_join = true;
  bool distributive = true;
  uint64_t triples_checked = 0;
  bool exhaustive = true;
};

AssemblyReport verify_assembly(const FiniteFrame& f, const std::vector<ClosureMap>& nuclei,
                               size_t triple_bound = 192, uint64_t seed = 0);

// Per-nucleus outcome of the quotient-stays-non-archimedean check: the
// j-image of the base is verified to be a non-archimedean base of the
// quotient frame.
struct QuotVerification {
  int nucleus_index = -1;
  bool base_law = false;
  bool trichotomy = false;
  std::vector<int> image_base;  // quotient elements
  bool ok() const { return base_law && trichotomy; }
};

std::vector<QuotVerification> verify_quot(const FiniteFrame& f, const BaseSet& base,
                                          const std::vector<ClosureMap>& nuclei);

}  // namespace pointfree
