#include "pointfree/frame.hpp"

#include <algorithm>
#include <cstdlib>

#include "pointfree/nonarch.hpp"
#include "pointfree/tree.hpp"

namespace pointfree {

int FiniteFrame::default_max_size() {
  if (const char* env = std::getenv("POINTFREE_MAX_FRAME")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 512;
}

FiniteFrame FiniteFrame::from_poset(Poset p, int max_size) {
  const int n = p.size();
  if (n == 0) throw Error("frame: empty carrier");
  if (n > max_size) throw TooLargeError("frame: carrier exceeds size bound");

  FiniteFrame f;
  f.meet_.assign(size_t(n) * n, -1);
  f.join_.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Mask lower = p.down(a) & p.down(b);
      int m = -1;
      for (int c = lower.first(); c != -1; c = lower.next(c))
        if (lower.subset_of(p.down(c))) {
          m = c;
          break;
        }
      if (m == -1)
        throw Error("frame: elements " + p.label(a) + "," + p.label(b) + " have no meet");
      Mask upper = p.up(a) & p.up(b);
      int j = -1;
      for (int c = upper.first(); c != -1; c = upper.next(c))
        if (upper.subset_of(p.up(c))) {
          j = c;
          break;
        }
      if (j == -1)
        throw Error("frame: elements " + p.label(a) + "," + p.label(b) + " have no join");
      f.meet_[size_t(a) * n + b] = f.meet_[size_t(b) * n + a] = m;
      f.join_[size_t(a) * n + b] = f.join_[size_t(b) * n + a] = j;
    }

  int bot = 0, top = 0;
  for (int a = 1; a < n; ++a) {
    bot = f.meet_[size_t(bot) * n + a];
    top = f.join_[size_t(top) * n + a];
  }
  f.bottom_ = bot;
  f.top_ = top;
  f.carrier_ = std::move(p);

  // finite distributivity a /\ (x \/ y) = (a/\x) \/ (a/\y), all triples
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        int lhs = f.meet(a, f.join(x, y));
        int rhs = f.join(f.meet(a, x), f.meet(a, y));
        if (lhs != rhs)
          throw Error("frame: distributivity fails at (" + f.label(a) + "," + f.label(x) + "," +
                      f.label(y) + ")");
      }
  return f;
}

FiniteFrame FiniteFrame::powerset(int atoms) {
  if (atoms < 0 || atoms > 16) throw TooLargeError("powerset: atom count out of range");
  const int n = 1 << atoms;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) leq[a][b] = (a & ~b) == 0;
    std::string s = "{";
    for (int i = 0; i < atoms; ++i)
      if ((a >> i) & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    labels[a] = s + "}";
  }
  return from_poset(Poset::validate(leq, std::move(labels)));
}

FiniteFrame FiniteFrame::chain(int n) {
  if (n <= 0) throw Error("chain: need at least one element");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[a][b] = true;
  return from_poset(Poset::validate(leq));
}

namespace {

FiniteFrame frame_on_masks(std::vector<Mask> family, std::vector<std::string> labels) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const int n = int(family.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = family[a].subset_of(family[b]);
  if (labels.empty()) {
    labels.resize(n);
    for (int a = 0; a < n; ++a) {
      std::string s = "{";
      bool first = true;
      for (int i : family[a].bits()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
      }
      labels[a] = s + "}";
    }
  }
  return FiniteFrame::from_poset(Poset::validate(leq, std::move(labels)));
}

}  // namespace

FiniteFrame FiniteFrame::alexandroff(const UpsetFamily& fam) {
  std::vector<std::string> labels;
  labels.reserve(fam.members.size());
  for (const Mask& m : fam.members) {
    std::string s = "{";
    bool first = true;
    for (int i : m.bits()) {
      if (!first) s += ",";
      s += fam.poset.label(i);
      first = false;
    }
    labels.push_back(s + "}");
  }
  return frame_on_masks(fam.members, std::move(labels));
}

FiniteFrame FiniteFrame::from_mask_family(std::vector<Mask> family,
                                          std::vector<std::string> labels) {
  for (size_t a = 0; a < family.size(); ++a)
    for (size_t b = a + 1; b < family.size(); ++b) {
      Mask u = family[a] | family[b];
      Mask i = family[a] & family[b];
      if (std::find(family.begin(), family.end(), u) == family.end() ||
          std::find(family.begin(), family.end(), i) == family.end())
        throw Error("from_mask_family: family not closed under union/intersection");
    }
  return frame_on_masks(std::move(family), std::move(labels));
}

int FiniteFrame::meet_all(const Mask& xs) const {
  int r = top_;
  for (int x = xs.first(); x != -1; x = xs.next(x)) r = meet(r, x);
  return r;
}

int FiniteFrame::join_all(const Mask& xs) const {
  int r = bottom_;
  for (int x = xs.first(); x != -1; x = xs.next(x)) r = join(r, x);
  return r;
}

int FiniteFrame::heyting(int a, int b) const {
  // join of {x | x /\ a <= b}; distributivity makes the join itself qualify
  int r = bottom_;
  for (int x = 0; x < size(); ++x)
    if (leq(meet(x, a), b)) r = join(r, x);
  return r;
}

bool FiniteFrame::is_complemented(int a) const {
  return join(a, negation(a)) == top_;
}

std::optional<int> FiniteFrame::complement(int a) const {
  int na = negation(a);
  if (join(a, na) == top_) return na;
  return std::nullopt;
}

Mask FiniteFrame::complemented_elements() const {
  Mask r(size());
  for (int a = 0; a < size(); ++a)
    if (is_complemented(a)) r.set(a);
  return r;
}

Mask FiniteFrame::atoms() const {
  Mask r(size());
  for (int a = 0; a < size(); ++a) {
    if (a == bottom_) continue;
    Mask below = carrier_.down(a);
    below.reset(a);
    below.reset(bottom_);
    if (below.empty()) r.set(a);
  }
  return r;
}

bool FiniteFrame::rather_below(int a, int b) const {
  return join(negation(a), b) == top_;
}

std::vector<Mask> FiniteFrame::completely_below_relation() const {
  const int n = size();
  std::vector<Mask> rel(n, Mask(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rather_below(a, b)) rel[a].set(b);
  // greatest interpolative subrelation: keep (a,b) while some c has
  // (a,c) and (c,b); iterate to fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = rel[a].first(); b != -1; b = rel[a].next(b)) {
        bool witnessed = false;
        for (int c = rel[a].first(); c != -1; c = rel[a].next(c))
          if (rel[c].test(b)) {
            witnessed = true;
            break;
          }
        if (!witnessed) {
          rel[a].reset(b);
          changed = true;
        }
      }
  }
  return rel;
}

bool FiniteFrame::completely_below(int a, int b) const {
  return completely_below_relation()[a].test(b);
}

bool FiniteFrame::is_base(const Mask& members, int* first_failure) const {
  for (int a = 0; a < size(); ++a) {
    Mask below = members & carrier_.down(a);
    if (join_all(below) != a) {
      if (first_failure) *first_failure = a;
      return false;
    }
  }
  return true;
}

BaseSet make_base(const FiniteFrame& f, const Mask& members) {
  int bad = -1;
  if (!f.is_base(members, &bad))
    throw NotABaseError(bad, "base law fails at element " + f.label(bad));
  return BaseSet{&f, members};
}

bool is_zero_dimensional(const FiniteFrame& f, Mask* witness_base) {
  Mask comp = f.complemented_elements();
  if (witness_base) *witness_base = comp;
  return f.is_base(comp);
}

bool is_regular(const FiniteFrame& f) {
  for (int a = 0; a < f.size(); ++a) {
    int r = f.bottom();
    for (int x = 0; x < f.size(); ++x)
      if (f.rather_below(x, a)) r = f.join(r, x);
    if (r != a) return false;
  }
  return true;
}

bool is_completely_regular(const FiniteFrame& f) {
  auto rel = f.completely_below_relation();
  for (int a = 0; a < f.size(); ++a) {
    int r = f.bottom();
    for (int x = 0; x < f.size(); ++x)
      if (rel[x].test(a)) r = f.join(r, x);
    if (r != a) return false;
  }
  return true;
}

bool is_fit(const FiniteFrame& f) {
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b) {
      if (f.leq(a, b)) continue;
      bool found = false;
      for (int x = 0; x < f.size() && !found; ++x) {
        if (f.join(a, x) != f.top()) continue;
        for (int y = 0; y < f.size() && !found; ++y)
          if (!f.leq(y, b) && f.leq(f.meet(x, y), b)) found = true;
      }
      if (!found) return false;
    }
  return true;
}

SeparationReport separations(const FiniteFrame& f) {
  SeparationReport r;
  r.zero_dimensional = is_zero_dimensional(f, &r.zero_dim_witness_base);
  r.regular = is_regular(f);
  r.completely_regular = is_completely_regular(f);
  r.fit = is_fit(f);
  return r;
}

bool is_point(const FiniteFrame& f, const Mask& kernel) {
  if (!kernel.test(f.top()) || kernel.test(f.bottom())) return false;
  for (int a = kernel.first(); a != -1; a = kernel.next(a)) {
    if (!f.carrier().up(a).subset_of(kernel)) return false;  // upward-closed
    for (int b = kernel.next(a); b != -1; b = kernel.next(b))
      if (!kernel.test(f.meet(a, b))) return false;  // meet-closed
  }
  for (int a = 0; a < f.size(); ++a)
    for (int b = a; b < f.size(); ++b)
      if (kernel.test(f.join(a, b)) && !kernel.test(a) && !kernel.test(b))
        return false;  // prime for joins
  return true;
}

namespace {

// Backtracking enumeration of frame morphisms A -> 2. `val` is -1/0/1 per
// element; propagation applies monotonicity plus the meet/join laws until
// stable or contradictory.
struct MorphismSearch {
  const FiniteFrame& f;
  std::vector<Mask>& out;

  bool propagate(std::vector<int8_t>& val) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < f.size(); ++a) {
        if (val[a] == -1) continue;
        for (int b = 0; b < f.size(); ++b) {
          if (val[a] == 1 && f.leq(a, b)) {
            if (val[b] == 0) return false;
            if (val[b] == -1) val[b] = 1, changed = true;
          }
          if (val[a] == 0 && f.leq(b, a)) {
            if (val[b] == 1) return false;
            if (val[b] == -1) val[b] = 0, changed = true;
          }
          if (val[b] == -1) continue;
          if (val[a] == 1 && val[b] == 1) {
            int m = f.meet(a, b);
            if (val[m] == 0) return false;
            if (val[m] == -1) val[m] = 1, changed = true;
          }
          int j = f.join(a, b);
          if (val[a] == 0 && val[b] == 0) {
            if (val[j] == 1) return false;
            if (val[j] == -1) val[j] = 0, changed = true;
          }
          if (val[j] == 1 && val[a] == 0 && val[b] == -1) val[b] = 1, changed = true;
        }
      }
    }
    return true;
  }

  void run(std::vector<int8_t> val) {
    if (!propagate(val)) return;
    int undecided = -1;
    for (int a = 0; a < f.size(); ++a)
      if (val[a] == -1) {
        undecided = a;
        break;
      }
    if (undecided == -1) {
      Mask kernel(f.size());
      for (int a = 0; a < f.size(); ++a)
        if (val[a] == 1) kernel.set(a);
      // full check; propagation is a pruner, not the authority
      if (is_point(f, kernel)) out.push_back(kernel);
      return;
    }
    auto v1 = val;
    v1[undecided] = 1;
    run(std::move(v1));
    val[undecided] = 0;
    run(std::move(val));
  }
};

std::vector<Point> to_points(std::vector<Mask> kernels) {
  std::sort(kernels.begin(), kernels.end());
  kernels.erase(std::unique(kernels.begin(), kernels.end()), kernels.end());
  std::vector<Point> pts;
  pts.reserve(kernels.size());
  for (auto& k : kernels) pts.push_back(Point{std::move(k)});
  return pts;
}

}  // namespace

std::vector<Point> points_by_morphism_search(const FiniteFrame& f) {
  std::vector<Mask> kernels;
  std::vector<int8_t> val(f.size(), -1);
  val[f.bottom()] = 0;
  val[f.top()] = 1;
  if (f.bottom() == f.top()) return {};  // trivial frame: no morphism to 2
  MorphismSearch{f, kernels}.run(std::move(val));
  return to_points(std::move(kernels));
}

std::vector<Point> points_by_prime_filters(const FiniteFrame& f) {
  // every filter of a finite lattice is principal, so scan generators
  std::vector<Mask> kernels;
  for (int q = 0; q < f.size(); ++q) {
    if (q == f.bottom()) continue;
    bool prime = true;
    for (int a = 0; a < f.size() && prime; ++a)
      for (int b = a; b < f.size(); ++b)
        if (f.leq(q, f.join(a, b)) && !f.leq(q, a) && !f.leq(q, b)) {
          prime = false;
          break;
        }
    if (prime) kernels.push_back(f.carrier().up(q));
  }
  return to_points(std::move(kernels));
}

std::vector<Point> points_by_meet_irreducibles(const FiniteFrame& f) {
  std::vector<Mask> kernels;
  for (int p = 0; p < f.size(); ++p) {
    if (p == f.top()) continue;  // strict irreducibility, top excluded
    bool irreducible = true;
    for (int a = 0; a < f.size() && irreducible; ++a)
      for (int b = a; b < f.size(); ++b)
        if (f.leq(f.meet(a, b), p) && !f.leq(a, p) && !f.leq(b, p)) {
          irreducible = false;
          break;
        }
    if (irreducible) kernels.push_back(f.carrier().down(p).complement());
  }
  return to_points(std::move(kernels));
}

std::vector<Point> points(const FiniteFrame& f) {
  auto m1 = points_by_morphism_search(f);
  auto m2 = points_by_prime_filters(f);
  auto m3 = points_by_meet_irreducibles(f);
  auto same = [](const std::vector<Point>& x, const std::vector<Point>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (x[i].kernel != y[i].kernel) return false;
    return true;
  };
  if (!same(m1, m2) || !same(m2, m3))
    throw CrossCheckMismatch("points: the three enumerations disagree");
  return m1;
}

SpatialReflection spatial_reflection(const FiniteFrame& f) {
  SpatialReflection r;
  r.pts = points(f);
  const int np = int(r.pts.size());
  r.table.assign(f.size(), Mask(np));
  for (int a = 0; a < f.size(); ++a)
    for (int p = 0; p < np; ++p)
      if (r.pts[p].kernel.test(a)) r.table[a].set(p);

  r.injective = true;
  for (int a = 0; a < f.size() && r.injective; ++a)
    for (int b = a + 1; b < f.size(); ++b)
      if (r.table[a] == r.table[b]) {
        r.injective = false;
        break;
      }

  r.morphism = r.table[f.bottom()].empty() && r.table[f.top()] == Mask::full(np);
  for (int a = 0; a < f.size() && r.morphism; ++a)
    for (int b = a; b < f.size(); ++b) {
      if (r.table[f.meet(a, b)] != (r.table[a] & r.table[b]) ||
          r.table[f.join(a, b)] != (r.table[a] | r.table[b])) {
        r.morphism = false;
        break;
      }
    }

  r.image = r.table;
  std::sort(r.image.begin(), r.image.end());
  r.image.erase(std::unique(r.image.begin(), r.image.end()), r.image.end());
  return r;
}

PointTreeReport check_point_tree(const FiniteFrame& f, const TreeBase& tb) {
  PointTreeReport rep;
  SpatialReflection refl = spatial_reflection(f);
  const Tree& t = tb.tree;

  // (a) at most one node per level in each point's kernel
  for (size_t p = 0; p < refl.pts.size() && rep.at_most_one_per_level; ++p) {
    for (const Mask& level : tb.levels) {
      int hits = 0;
      for (int node = level.first(); node != -1; node = level.next(node))
        if (refl.pts[p].kernel.test(tb.node_to_element[node])) ++hits;
      if (hits > 1) {
        rep.at_most_one_per_level = false;
        rep.violation = "point " + std::to_string(p) + " selects " + std::to_string(hits) +
                        " nodes on one level";
        break;
      }
    }
  }

  // (b)+(d) node order matches point-set containment and the map is injective
  for (int x = 0; x < t.size() && rep.order_isomorphism; ++x)
    for (int y = 0; y < t.size(); ++y) {
      const Mask& ux = refl.table[tb.node_to_element[x]];
      const Mask& uy = refl.table[tb.node_to_element[y]];
      bool frame_le = f.leq(tb.node_to_element[x], tb.node_to_element[y]);
      if (frame_le != ux.subset_of(uy)) {
        rep.order_isomorphism = false;
        rep.violation = "node pair (" + std::to_string(x) + "," + std::to_string(y) +
                        ") breaks the order correspondence";
        break;
      }
      if (x != y && !t.is_ancestor(x, y) && !t.is_ancestor(y, x) && ux.intersects(uy)) {
        rep.order_isomorphism = false;
        rep.violation = "incomparable nodes with overlapping point sets";
        break;
      }
    }

  // (c) {U(node)} generates every U(a) by union
  for (int a = 0; a < f.size() && rep.basis_of_canonical_topology; ++a) {
    Mask acc(int(refl.pts.size()));
    for (int node = 0; node < t.size(); ++node) {
      const Mask& ub = refl.table[tb.node_to_element[node]];
      if (ub.subset_of(refl.table[a])) acc |= ub;
    }
    if (acc != refl.table[a]) {
      rep.basis_of_canonical_topology = false;
      rep.violation = "U(" + f.label(a) + ") is not a union of node basics";
    }
  }
  return rep;
}

}  // namespace pointfree
