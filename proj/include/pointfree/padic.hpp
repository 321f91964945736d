#pragma once

#include <string>
#include <vector>

#include "pointfree/mask.hpp"
#include "pointfree/tree.hpp"

namespace pointfree {

/**
 * Exact p-adic scalars and balls.
 *
 * A scalar is mantissa * p^exponent with the mantissa coprime to p (zero is
 * mantissa 0, exponent 0), so centers live in Z[1/p] and every computation is
 * integer-exact; no floating point anywhere.
 *
 * A ball is the coset center + p^m Zp. The open ball of radius p^-n around a
 * is stored with m = n+1: with closed cosets the defining disjointness
 * relation would fail at |a-b|_p = r, so the open reading is the only one
 * that keeps the generator relations consistent.
 */
struct PAdicScalar {
  long long mantissa = 0;
  int exponent = 0;

  bool is_zero() const { return mantissa == 0; }
};

PAdicScalar normalize_scalar(long long p, long long mantissa, int exponent);
PAdicScalar scalar_sub(long long p, const PAdicScalar& x, const PAdicScalar& y);
// Valuation; INT_MAX for zero.
int valuation(long long p, const PAdicScalar& x);

class PAdicBall {
 public:
  // Canonicalizes the center modulo p^m.
  PAdicBall(long long p, PAdicScalar center, int coset_exp);
  static PAdicBall zp(long long p) { return PAdicBall(p, PAdicScalar{}, 0); }
  // Open ball of radius p^-n around an exact scalar.
  static PAdicBall open_ball(long long p, PAdicScalar center, int n) {
    return PAdicBall(p, center, n + 1);
  }

  long long p() const { return p_; }
  const PAdicScalar& center() const { return center_; }
  int coset_exp() const { return m_; }

  bool operator==(const PAdicBall& o) const;
  std::string to_string() const;  // p^m*Zp+c literal

 private:
  long long p_;
  PAdicScalar center_;
  int m_;
};

enum class BallRelation { Disjoint, LeftInsideRight, RightInsideLeft, Equal };

// Coset trichotomy: disjoint when the centers differ before either coset
// modulus, containment by coset inclusion otherwise.
BallRelation trichotomy(const PAdicBall& a, const PAdicBall& b);

// v_p(x - center) >= m, exact.
bool membership_oracle(const PAdicBall& b, const PAdicScalar& x);

// Canonical ball families. zp_ball_family: coset exponents 0..depth with all
// centers mod p^m. window_ball_family: exponents -depth..depth with centers
// in p^-depth Z (sizes grow fast; guarded).
std::vector<PAdicBall> zp_ball_family(long long p, int depth);
std::vector<PAdicBall> window_ball_family(long long p, int depth, uint64_t cap = (1u << 22));

// Brute-force residue footprint of a ball on the grid {k * p^grid_exp :
// 0 <= k < p^(span - grid_exp)}; two balls relate exactly as their
// footprints do as long as their exponents stay within [grid_exp, span].
Mask residue_mask(const PAdicBall& b, int grid_exp, int span);

struct RelationReport {
  uint64_t pairs_checked = 0;
  uint64_t trichotomy_disagreements = 0;  // relation (1) vs the residue oracle
  uint64_t split_failures = 0;            // relation (3): p disjoint children per ball
  bool grid_covered = false;              // relation (2) on the truncated grid
  bool ok() const {
    return trichotomy_disagreements == 0 && split_failures == 0 && grid_covered;
  }
};

// Verifies the generator relations on the symmetric window family.
RelationReport verify_relations(long long p, int depth);

// Complete p-ary coset tree of Zp down to exponent `depth`; parallel ball
// list indexed by tree node.
struct BallTree {
  Tree tree;
  std::vector<PAdicBall> balls;
};

BallTree zp_tree(long long p, int depth);

// Finite window of the ball order over the field: p^|vmin| roots, the cosets
// of p^vmin Zp, each split down to exponent `depth`.
struct BallForest {
  std::vector<BallTree> trees;
};

BallForest qp_ball_tree(long long p, int vmin, int depth);

}  // namespace pointfree
