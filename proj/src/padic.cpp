#include "pointfree/padic.hpp"

#include <climits>

#include "pointfree/errors.hpp"

namespace pointfree {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long ipow(long long p, int e) {
  long long r = 1;
  while (e-- > 0) {
    if (r > LLONG_MAX / p) throw TooLargeError("padic: power overflow");
    r *= p;
  }
  return r;
}

}  // namespace

PAdicScalar normalize_scalar(long long p, long long mantissa, int exponent) {
  if (mantissa == 0) return PAdicScalar{0, 0};
  while (mantissa % p == 0) {
    mantissa /= p;
    ++exponent;
  }
  return PAdicScalar{mantissa, exponent};
}

PAdicScalar scalar_sub(long long p, const PAdicScalar& x, const PAdicScalar& y) {
  if (x.is_zero()) return normalize_scalar(p, -y.mantissa, y.exponent);
  if (y.is_zero()) return x;
  int e = std::min(x.exponent, y.exponent);
  long long xm = x.mantissa * ipow(p, x.exponent - e);
  long long ym = y.mantissa * ipow(p, y.exponent - e);
  return normalize_scalar(p, xm - ym, e);
}

int valuation(long long p, const PAdicScalar& x) {
  (void)p;
  if (x.is_zero()) return INT_MAX;
  return x.exponent;
}

PAdicBall::PAdicBall(long long p, PAdicScalar center, int coset_exp) : p_(p), m_(coset_exp) {
  if (!is_prime(p)) throw Error("padic: " + std::to_string(p) + " is not prime");
  // canonical representative: digits of the center from its exponent up to
  // m-1, nonnegative, then p-powers stripped back out of the mantissa
  if (center.is_zero() || center.exponent >= m_) {
    center_ = PAdicScalar{0, 0};
    return;
  }
  long long mod = ipow(p_, m_ - center.exponent);
  long long rep = center.mantissa % mod;
  if (rep < 0) rep += mod;
  center_ = normalize_scalar(p_, rep, center.exponent);
  if (center_.exponent >= m_) center_ = PAdicScalar{0, 0};
}

bool PAdicBall::operator==(const PAdicBall& o) const {
  return p_ == o.p_ && m_ == o.m_ && center_.mantissa == o.center_.mantissa &&
         center_.exponent == o.center_.exponent;
}

std::string PAdicBall::to_string() const {
  std::string c;
  if (center_.is_zero()) {
    c = "0";
  } else if (center_.exponent >= 0) {
    c = std::to_string(center_.mantissa * ipow(p_, center_.exponent));
  } else {
    c = std::to_string(center_.mantissa) + "/" + std::to_string(ipow(p_, -center_.exponent));
  }
  return std::to_string(p_) + "^" + std::to_string(m_) + "*Zp+" + c;
}

BallRelation trichotomy(const PAdicBall& a, const PAdicBall& b) {
  if (a.p() != b.p()) throw PrimeMismatchError("trichotomy: balls over different primes");
  int v = valuation(a.p(), scalar_sub(a.p(), a.center(), b.center()));
  const int m1 = a.coset_exp(), m2 = b.coset_exp();
  if (m1 == m2 && v >= m1) return BallRelation::Equal;
  if (m1 >= m2 && v >= m2) return BallRelation::LeftInsideRight;
  if (m2 >= m1 && v >= m1) return BallRelation::RightInsideLeft;
  return BallRelation::Disjoint;
}

bool membership_oracle(const PAdicBall& b, const PAdicScalar& x) {
  return valuation(b.p(), scalar_sub(b.p(), x, b.center())) >= b.coset_exp();
}

std::vector<PAdicBall> zp_ball_family(long long p, int depth) {
  std::vector<PAdicBall> out;
  for (int m = 0; m <= depth; ++m) {
    long long mod = ipow(p, m);
    for (long long c = 0; c < mod; ++c)
      out.push_back(PAdicBall(p, normalize_scalar(p, c, 0), m));
  }
  return out;
}

std::vector<PAdicBall> window_ball_family(long long p, int depth, uint64_t cap) {
  uint64_t grid = 1;
  for (int i = 0; i < 2 * depth; ++i) {
    grid *= uint64_t(p);
    if (grid > cap) throw TooLargeError("window_ball_family: grid exceeds cap");
  }
  std::vector<PAdicBall> out;
  for (int m = -depth; m <= depth; ++m) {
    long long mod = ipow(p, m + depth);  // centers in p^-depth Z modulo p^m
    for (long long k = 0; k < mod; ++k)
      out.push_back(PAdicBall(p, normalize_scalar(p, k, -depth), m));
    if (out.size() > cap) throw TooLargeError("window_ball_family: family exceeds cap");
  }
  return out;
}

Mask residue_mask(const PAdicBall& b, int grid_exp, int span) {
  if (b.coset_exp() > span || b.coset_exp() < grid_exp ||
      (!b.center().is_zero() && b.center().exponent < grid_exp))
    throw NotRepresentableError("residue_mask: ball outside the grid window");
  long long points = ipow(b.p(), span - grid_exp);
  if (points > (1 << 24)) throw TooLargeError("residue_mask: grid too large");
  Mask out{int(points)};
  for (long long k = 0; k < points; ++k) {
    PAdicScalar x = normalize_scalar(b.p(), k, grid_exp);
    if (membership_oracle(b, x)) out.set(int(k));
  }
  return out;
}

RelationReport verify_relations(long long p, int depth) {
  RelationReport rep;
  std::vector<PAdicBall> family = window_ball_family(p, depth);
  const int grid_exp = -depth, span = depth;

  std::vector<Mask> masks;
  masks.reserve(family.size());
  for (const auto& b : family) masks.push_back(residue_mask(b, grid_exp, span));

  // relation (1): the trichotomy's Disjoint verdict, the metric condition
  // |a-b| >= max radius, and the residue footprints must agree pairwise
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      ++rep.pairs_checked;
      bool tri = trichotomy(family[i], family[j]) == BallRelation::Disjoint;
      int v = valuation(p, scalar_sub(p, family[i].center(), family[j].center()));
      bool metric = v < std::min(family[i].coset_exp(), family[j].coset_exp());
      bool oracle = !masks[i].intersects(masks[j]);
      if (tri != metric || tri != oracle) ++rep.trichotomy_disagreements;
    }

  // relation (3): every ball above the finest level splits into p disjoint
  // child cosets that exactly cover it
  for (const auto& b : family) {
    if (b.coset_exp() >= depth) continue;
    Mask whole = residue_mask(b, grid_exp, span);
    Mask acc(whole.width());
    bool disjoint = true;
    for (long long d = 0; d < p; ++d) {
      PAdicScalar shift = normalize_scalar(p, d, b.coset_exp());
      PAdicScalar child_center =
          scalar_sub(p, b.center(), normalize_scalar(p, -shift.mantissa, shift.exponent));
      PAdicBall child(p, child_center, b.coset_exp() + 1);
      Mask cm = residue_mask(child, grid_exp, span);
      if (cm.intersects(acc)) disjoint = false;
      acc |= cm;
    }
    if (!disjoint || acc != whole) ++rep.split_failures;
  }

  // relation (2): the family covers the whole truncated grid
  Mask cover(masks.empty() ? 0 : masks.front().width());
  for (const auto& m : masks) cover |= m;
  rep.grid_covered = !masks.empty() && cover == Mask::full(cover.width());
  return rep;
}

BallTree zp_tree(long long p, int depth) {
  if (depth < 0) throw Error("zp_tree: negative depth");
  BallTree out;
  std::vector<int> parent{-1};
  out.balls.push_back(PAdicBall::zp(p));
  std::vector<int> frontier{0};
  for (int level = 0; level < depth; ++level) {
    std::vector<int> next;
    for (int v : frontier) {
      PAdicBall b = out.balls[v];  // copy: the vector grows below
      for (long long d = 0; d < p; ++d) {
        // child coset center + d * p^level
        PAdicScalar delta = normalize_scalar(p, d, level);
        PAdicScalar c =
            scalar_sub(p, b.center(), normalize_scalar(p, -delta.mantissa, delta.exponent));
        out.balls.push_back(PAdicBall(p, c, level + 1));
        parent.push_back(v);
        next.push_back(int(parent.size()) - 1);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::string> labels;
  labels.reserve(out.balls.size());
  for (const auto& b : out.balls) labels.push_back(b.to_string());
  out.tree = Tree::from_parents(std::move(parent), std::move(labels));
  return out;
}

BallForest qp_ball_tree(long long p, int vmin, int depth) {
  if (vmin > 0 || depth < 0) throw Error("qp_ball_tree: need vmin <= 0 <= depth");
  BallForest forest;
  long long roots = ipow(p, -vmin);
  for (long long r = 0; r < roots; ++r) {
    PAdicScalar center = normalize_scalar(p, r, 2 * vmin);  // cosets of p^vmin Zp
    BallTree bt;
    std::vector<int> parent{-1};
    bt.balls.push_back(PAdicBall(p, center, vmin));
    std::vector<int> frontier{0};
    for (int level = vmin; level < depth; ++level) {
      std::vector<int> next;
      for (int v : frontier) {
        PAdicBall b = bt.balls[v];  // copy: the vector grows below
        for (long long d = 0; d < p; ++d) {
          PAdicScalar delta = normalize_scalar(p, d, level);
          PAdicScalar c =
              scalar_sub(p, b.center(), normalize_scalar(p, -delta.mantissa, delta.exponent));
          bt.balls.push_back(PAdicBall(p, c, level + 1));
          parent.push_back(v);
          next.push_back(int(parent.size()) - 1);
        }
      }
      frontier = std::move(next);
    }
    std::vector<std::string> labels;
    labels.reserve(bt.balls.size());
    for (const auto& b : bt.balls) labels.push_back(b.to_string());
    bt.tree = Tree::from_parents(std::move(parent), std::move(labels));
    forest.trees.push_back(std::move(bt));
  }
  return forest;
}

}  // namespace pointfree
