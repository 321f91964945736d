#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointfree/poset.hpp"

namespace pointfree {

/**
 * Finite frame: a finite lattice whose meet distributes over binary joins
 * (for finite lattices this yields the full infinite distributive law, so
 * every finite distributive lattice is a frame). Meet/join are tabulated at
 * construction and every lattice law, including distributivity over all
 * triples, is verified eagerly; operations may assume them afterwards.
 */
class FiniteFrame {
 public:
  FiniteFrame() = default;  // empty; fill through a factory

  // Builds the frame over a validated poset; throws if some pair lacks a
  // meet/join or a distributivity triple fails. Carrier sizes above
  // `max_size` are rejected (full validation is cubic).
  static FiniteFrame from_poset(Poset p, int max_size = default_max_size());

  static FiniteFrame powerset(int atoms);      // Boolean frame 2^atoms
  static FiniteFrame chain(int n);             // 0 < ... < n-1
  static FiniteFrame alexandroff(const UpsetFamily& fam);  // upset frame of a poset
  // Boolean frame on an explicit family of masks that is closed under union
  // and intersection (used for branch-space opens and reflection images).
  static FiniteFrame from_mask_family(std::vector<Mask> family,
                                      std::vector<std::string> labels = {});

  static int default_max_size();  // 512 unless POINTFREE_MAX_FRAME overrides

  const Poset& carrier() const { return carrier_; }
  int size() const { return carrier_.size(); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int a, int b) const { return carrier_.leq(a, b); }
  bool lt(int a, int b) const { return a != b && carrier_.leq(a, b); }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int meet_all(const Mask& xs) const;  // empty set -> top
  int join_all(const Mask& xs) const;  // empty set -> bottom
  const std::string& label(int a) const { return carrier_.label(a); }

  int heyting(int a, int b) const;  // largest x with x /\ a <= b
  int negation(int a) const { return heyting(a, bottom_); }
  bool is_complemented(int a) const;
  std::optional<int> complement(int a) const;
  Mask complemented_elements() const;
  Mask atoms() const;

  bool rather_below(int a, int b) const;  // not(a) \/ b = 1
  // Largest interpolative subrelation of rather_below, as row masks.
  std::vector<Mask> completely_below_relation() const;
  bool completely_below(int a, int b) const;

  bool is_base(const Mask& members, int* first_failure = nullptr) const;

 private:
  Poset carrier_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

// A base of a frame: every element is the join of the members below it.
struct BaseSet {
  const FiniteFrame* frame = nullptr;
  Mask members;
};

BaseSet make_base(const FiniteFrame& f, const Mask& members);  // checks the base law

// A point: frame morphism to 2, stored as its kernel (the elements sent to 1,
// a completely prime filter).
struct Point {
  Mask kernel;
};

// Separation-property report for a frame.
struct SeparationReport {
  bool zero_dimensional = false;
  Mask zero_dim_witness_base;  // complemented elements, when they form a base
  bool regular = false;
  bool completely_regular = false;
  bool fit = false;
};

bool is_zero_dimensional(const FiniteFrame& f, Mask* witness_base = nullptr);
bool is_regular(const FiniteFrame& f);
bool is_completely_regular(const FiniteFrame& f);
bool is_fit(const FiniteFrame& f);
SeparationReport separations(const FiniteFrame& f);

// Point space via three independent routes (morphism search, principal
// completely prime filters, meet-irreducibles); throws CrossCheckMismatch if
// they ever disagree. Result is sorted by kernel mask.
std::vector<Point> points(const FiniteFrame& f);

std::vector<Point> points_by_morphism_search(const FiniteFrame& f);
std::vector<Point> points_by_prime_filters(const FiniteFrame& f);
std::vector<Point> points_by_meet_irreducibles(const FiniteFrame& f);

bool is_point(const FiniteFrame& f, const Mask& kernel);

// Spatial reflection a |-> U(a) = {p in pt | p(a) = 1}.
struct SpatialReflection {
  std::vector<Point> pts;
  std::vector<Mask> table;   // element -> mask over pts
  bool injective = false;
  bool morphism = false;     // preserves finite meets, all joins, 0 and 1
  std::vector<Mask> image;   // distinct point-set images, canonical order
};

SpatialReflection spatial_reflection(const FiniteFrame& f);

struct TreeBase;  // nonarch.hpp

// Point/tree compatibility checks for a tree base: (a) every point selects at
// most one node per level, (b) node order matches point-set containment,
// (c) the node images form a basis of the canonical point-space topology,
// (d) node -> U(node) is an order isomorphism onto its image.
struct PointTreeReport {
  bool at_most_one_per_level = true;
  bool order_isomorphism = true;
  bool basis_of_canonical_topology = true;
  std::string violation;  // empty when all checks pass
  bool ok() const {
    return at_most_one_per_level && order_isomorphism && basis_of_canonical_topology;
  }
};

PointTreeReport check_point_tree(const FiniteFrame& f, const TreeBase& tb);

}  // namespace pointfree
