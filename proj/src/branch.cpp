#include "pointfree/branch.hpp"

#include <algorithm>

namespace pointfree {

BranchSet branch_space(const Tree& t, int max_branches) {
  BranchSet bs;
  bs.tree = t;

  // branches of a finite tree are exactly the root-to-leaf paths
  Mask leaves = t.leaves();
  for (int leaf = leaves.first(); leaf != -1; leaf = leaves.next(leaf))
    bs.branches.push_back(t.ancestors(leaf));
  std::sort(bs.branches.begin(), bs.branches.end());
  const int nb = int(bs.branches.size());
  if (nb > max_branches) throw TooLargeError("branch_space: too many branches");

  bs.basic_open.assign(t.size(), Mask(nb));
  for (int v = 0; v < t.size(); ++v)
    for (int b = 0; b < nb; ++b)
      if (bs.branches[b].test(v)) bs.basic_open[v].set(b);

  // opens = image of the upsets under branch hitting = powerset of branches;
  // the powerset is generated directly, then certified against the image:
  // every leaf's basic open is the matching singleton
  for (int b = 0; b < nb; ++b) {
    int leaf = -1;
    for (int v = bs.branches[b].first(); v != -1; v = bs.branches[b].next(v))
      if (t.is_leaf(v)) leaf = v;
    if (leaf == -1 || bs.basic_open[leaf] != Mask::singleton(nb, b))
      throw CrossCheckMismatch("branch_space: leaf/branch correspondence broken");
  }
  if (nb > 0) {
    const uint64_t lim = uint64_t(1) << nb;
    bs.opens.reserve(lim);
    for (uint64_t bits = 0; bits < lim; ++bits) {
      Mask m(nb);
      for (int b = 0; b < nb; ++b)
        if ((bits >> b) & 1) m.set(b);
      bs.opens.push_back(m);
    }
    std::sort(bs.opens.begin(), bs.opens.end());
  }
  bs.open_index.reserve(bs.opens.size() * 2);
  for (int i = 0; i < int(bs.opens.size()); ++i) bs.open_index.emplace(bs.opens[i], i);

  // basic opens glue along upsets: hitting an up-set equals the union of the
  // basic opens of its members
  for (int v = 0; v < t.size(); ++v) {
    Mask expect(nb);
    Mask up = t.subtree(v);
    for (int x = up.first(); x != -1; x = up.next(x)) expect |= bs.basic_open[x];
    if (k_upper(bs, up) != expect)
      throw CrossCheckMismatch("branch_space: basic opens do not generate the up-set image");
  }
  return bs;
}

Mask k_upper(const BranchSet& bs, const Mask& upset) {
  Mask out(int(bs.branches.size()));
  for (int b = 0; b < int(bs.branches.size()); ++b)
    if (bs.branches[b].intersects(upset)) out.set(b);
  return out;
}

Mask k_lower(const BranchSet& bs, const Mask& open_set) {
  if (bs.find_open(open_set) == -1) throw NotOpenError("k_lower: set is not open");
  Mask out = Mask::full(bs.tree.size());
  for (int b = 0; b < int(bs.branches.size()); ++b)
    if (!open_set.test(b)) out &= bs.branches[b].complement();
  return out;
}

Mask ker_apply(const BranchSet& bs, const Mask& upset) {
  return k_lower(bs, k_upper(bs, upset));
}

Mask der_apply(const Tree& t, const Mask& upset) {
  Mask out(t.size());
  for (int v = 0; v < t.size(); ++v) {
    bool all_in = true;
    for (int c : t.children(v))
      if (!upset.test(c)) {
        all_in = false;
        break;
      }
    if (all_in) out.set(v);
  }
  return out;
}

Mask der_closure_apply(const Tree& t, const Mask& upset) {
  Mask cur = upset;
  for (;;) {
    Mask next = der_apply(t, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

Mask ler_apply(const BranchSet& bs, const Mask& closed_u, const Mask& upset) {
  return k_lower(bs, k_upper(bs, upset) | closed_u);
}

int cb_rank(const Tree& t) {
  Mask cur(t.size());
  int n = 0;
  for (;;) {
    Mask next = der_apply(t, cur);
    if (next == cur) return n;
    cur = next;
    ++n;
  }
}

OperatorTable tabulate(const UpsetFamily& fam, const std::function<Mask(const Mask&)>& op) {
  OperatorTable tbl;
  tbl.family = &fam;
  tbl.map.resize(fam.members.size());
  for (size_t i = 0; i < fam.members.size(); ++i) {
    int idx = fam.find(op(fam.members[i]));
    if (idx == -1) throw CrossCheckMismatch("tabulate: operator left the upset family");
    tbl.map[i] = idx;
  }
  return tbl;
}

OperatorTable ker_table(const BranchSet& bs, const UpsetFamily& fam) {
  return tabulate(fam, [&](const Mask& u) { return ker_apply(bs, u); });
}

OperatorTable der_table(const Tree& t, const UpsetFamily& fam) {
  return tabulate(fam, [&](const Mask& u) { return der_apply(t, u); });
}

OperatorTable der_closure_table(const Tree& t, const UpsetFamily& fam) {
  return tabulate(fam, [&](const Mask& u) { return der_closure_apply(t, u); });
}

OperatorTable ler_closed_table(const BranchSet& bs, const UpsetFamily& fam,
                               const Mask& closed_u) {
  return tabulate(fam, [&](const Mask& u) { return ler_apply(bs, closed_u, u); });
}

ClosureMap to_closure_map(const FiniteFrame& alex, const OperatorTable& table) {
  if (alex.size() != int(table.map.size()))
    throw Error("to_closure_map: frame/family size mismatch");
  return make_closure_map(alex, table.map);
}

FiniteFrame opens_frame(const BranchSet& bs) {
  FiniteFrame f = FiniteFrame::from_mask_family(bs.opens);
  if (f.size() != int(bs.opens.size()))
    throw CrossCheckMismatch("opens_frame: family order drifted");
  return f;
}

OperatorTable ler_table(const BranchSet& bs, const UpsetFamily& fam, const ClosureMap& j) {
  NucleusCheck chk = is_nucleus(j);
  if (!chk.ok) throw NotNucleusError("ler_table: j violates the " + chk.violated + " axiom");
  return tabulate(fam, [&](const Mask& u) {
    int v = bs.find_open(k_upper(bs, u));
    return k_lower(bs, bs.opens[j.apply(v)]);
  });
}

CoverageRelation coverage_from_operator(const Tree& t, const UpsetFamily& fam,
                                        const std::function<Mask(const Mask&)>& op) {
  CoverageRelation c;
  c.tree = &t;
  c.family = &fam;
  c.covers.reserve(fam.members.size());
  for (const Mask& u : fam.members) c.covers.push_back(op(u));
  return c;
}

CoverageReport coverage_check(const CoverageRelation& c) {
  CoverageReport rep;
  const Tree& t = *c.tree;
  const auto& fam = *c.family;
  const int n = t.size();
  const int m = int(fam.members.size());
  Poset order = t.to_poset();

  for (int u = 0; u < m && rep.upset_rule; ++u)
    if (!order.is_upset(c.covers[u])) {
      rep.upset_rule = false;
      rep.violation = "upset rule at family member " + std::to_string(u);
    }
  for (int u = 0; u < m && rep.infl; ++u)
    if (!fam.members[u].subset_of(c.covers[u])) {
      rep.infl = false;
      rep.violation = "infl rule at family member " + std::to_string(u);
    }
  // mono: b covered by a smaller upset forces everything above b covered by
  // the larger one
  for (int v = 0; v < m && rep.mono; ++v)
    for (int u = 0; u < m && rep.mono; ++u) {
      if (!fam.members[v].subset_of(fam.members[u])) continue;
      for (int b = c.covers[v].first(); b != -1; b = c.covers[v].next(b))
        if (!order.up(b).subset_of(c.covers[u])) {
          rep.mono = false;
          rep.violation = "mono rule at members (" + std::to_string(v) + "," +
                          std::to_string(u) + ") node " + std::to_string(b);
          break;
        }
    }
  for (int u = 0; u < m && rep.stability; ++u)
    for (int v = u; v < m && rep.stability; ++v) {
      int w = fam.find(fam.members[u] & fam.members[v]);
      if (w == -1) throw CrossCheckMismatch("coverage_check: family not meet-closed");
      if (!(c.covers[u] & c.covers[v]).subset_of(c.covers[w])) {
        rep.stability = false;
        rep.violation = "stability rule at members (" + std::to_string(u) + "," +
                        std::to_string(v) + ")";
      }
    }
  // idem: when U covers every element of V, U covers whatever V covers
  for (int u = 0; u < m && rep.idem; ++u)
    for (int v = 0; v < m && rep.idem; ++v)
      if (fam.members[v].subset_of(c.covers[u]) && !c.covers[v].subset_of(c.covers[u])) {
        rep.idem = false;
        rep.violation = "idem rule at members (" + std::to_string(v) + "," +
                        std::to_string(u) + ")";
      }
  (void)n;
  return rep;
}

GbiReport gbi_check(const Tree& t, const BranchSet& bs, const UpsetFamily& fam,
                    const Mask& closed_u) {
  GbiReport rep;

  std::vector<Mask> fixed;  // der-fixed upsets
  for (const Mask& u : fam.members)
    if (der_apply(t, u) == u) fixed.push_back(u);

  rep.gbi = true;
  for (const Mask& u : fixed)
    if (ler_apply(bs, closed_u, u) != u) {
      rep.gbi = false;
      break;
    }

  rep.tables_equal = true;
  for (const Mask& u : fam.members) {
    Mask d = der_closure_apply(t, u);
    Mask k = ker_apply(bs, u);
    Mask l = ler_apply(bs, closed_u, u);
    if (d != k || k != l) {
      rep.tables_equal = false;
      if (rep.witness.empty())
        rep.witness = "upset " + u.to_string() + ": der^inf=" + d.to_string() +
                      " ker=" + k.to_string() + " ler=" + l.to_string();
      break;
    }
  }

  rep.fixed_family = true;
  for (const Mask& u : fixed)
    if (ler_apply(bs, closed_u, u) != u) {
      rep.fixed_family = false;
      break;
    }

  // quotient of the upset frame by der^inf, materialized on the fixed family
  {
    std::vector<Mask> members = fixed;
    std::sort(members.begin(), members.end());
    const int k = int(members.size());
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) leq[i][j] = members[i].subset_of(members[j]);
    FiniteFrame qf = FiniteFrame::from_poset(Poset::validate(leq));
    rep.quotient_spatial = spatial_reflection(qf).injective;
  }
  return rep;
}

QuotientPresentation quotient_presentation(const FiniteFrame& f, const TreeBase& tb,
                                           const BranchSet& bs) {
  if (bs.tree.size() != tb.tree.size())
    throw Error("quotient_presentation: branch space of a different tree");
  for (int v = 0; v < bs.tree.size(); ++v)
    if (bs.tree.parent(v) != tb.tree.parent(v))
      throw Error("quotient_presentation: branch space of a different tree");
  QuotientPresentation qp;
  const int no = int(bs.opens.size());
  const int nt = tb.tree.size();

  qp.eta.assign(no, f.bottom());
  for (int v = 0; v < no; ++v) {
    int acc = f.bottom();
    for (int node = 0; node < nt; ++node)
      if (bs.basic_open[node].subset_of(bs.opens[v]))
        acc = f.join(acc, tb.node_to_element[node]);
    qp.eta[v] = acc;
  }

  qp.nodes_recovered = true;
  for (int node = 0; node < nt; ++node) {
    int v = bs.find_open(bs.basic_open[node]);
    if (v == -1 || qp.eta[v] != tb.node_to_element[node]) {
      qp.nodes_recovered = false;
      break;
    }
  }

  Mask image(f.size());
  for (int v = 0; v < no; ++v) image.set(qp.eta[v]);
  qp.surjective = image.count() == f.size();

  qp.morphism = true;
  int full_idx = bs.find_open(Mask::full(int(bs.branches.size())));
  int empty_idx = bs.find_open(Mask(int(bs.branches.size())));
  if (qp.eta[empty_idx] != f.bottom() || qp.eta[full_idx] != f.top()) qp.morphism = false;
  for (int v = 0; v < no && qp.morphism; ++v)
    for (int w = v; w < no; ++w) {
      int mi = bs.find_open(bs.opens[v] & bs.opens[w]);
      int ji = bs.find_open(bs.opens[v] | bs.opens[w]);
      if (qp.eta[mi] != f.meet(qp.eta[v], qp.eta[w]) ||
          qp.eta[ji] != f.join(qp.eta[v], qp.eta[w])) {
        qp.morphism = false;
        break;
      }
    }

  qp.injective = true;
  {
    std::vector<int> sorted = qp.eta;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) qp.injective = false;
  }

  // right adjoint as the node-basic union, checked against the adjunction
  qp.beta.assign(f.size(), -1);
  for (int a = 0; a < f.size(); ++a) {
    Mask v(int(bs.branches.size()));
    for (int node = 0; node < nt; ++node)
      if (f.leq(tb.node_to_element[node], a)) v |= bs.basic_open[node];
    qp.beta[a] = bs.find_open(v);
  }
  qp.beta_is_right_adjoint = true;
  for (int v = 0; v < no && qp.beta_is_right_adjoint; ++v)
    for (int a = 0; a < f.size(); ++a) {
      bool left = f.leq(qp.eta[v], a);
      bool right = bs.opens[v].subset_of(bs.opens[qp.beta[a]]);
      if (left != right) {
        qp.beta_is_right_adjoint = false;
        break;
      }
    }

  qp.non.assign(no, -1);
  for (int v = 0; v < no; ++v) qp.non[v] = qp.beta[qp.eta[v]];

  // the non-fixed opens carry the frame back: eta restricted to them is an
  // order isomorphism with inverse beta
  qp.fixed_iso = true;
  int fixed_count = 0;
  for (int v = 0; v < no; ++v)
    if (qp.non[v] == v) ++fixed_count;
  if (fixed_count != f.size()) qp.fixed_iso = false;
  for (int a = 0; a < f.size() && qp.fixed_iso; ++a)
    if (qp.eta[qp.beta[a]] != a) qp.fixed_iso = false;
  return qp;
}

LevelDecomposition level_decomposition(const FiniteFrame& f, const TreeBase& tb, int a) {
  LevelDecomposition ld;
  const Tree& t = tb.tree;
  Mask taken(f.size());  // basics already chosen at earlier levels
  int acc = f.bottom();

  // decomposition levels are the tree levels below the root; the bare root
  // stands in only for the single-node tree
  std::vector<std::pair<int, Mask>> levels;
  if (t.size() == 1) {
    levels.emplace_back(-1, tb.levels[0]);
  } else {
    for (size_t d = 1; d < tb.levels.size(); ++d)
      levels.emplace_back(int(d) - 1, tb.levels[d]);
  }

  for (auto& [idx, nodes] : levels) {
    std::vector<int> chosen;
    for (int v = nodes.first(); v != -1; v = nodes.next(v)) {
      int e = tb.node_to_element[v];
      if (!f.leq(e, a)) continue;
      bool shadowed = false;
      for (int x = taken.first(); x != -1; x = taken.next(x))
        if (f.leq(e, x)) {
          shadowed = true;
          break;
        }
      if (!shadowed) chosen.push_back(e);
    }
    for (int e : chosen) {
      taken.set(e);
      acc = f.join(acc, e);
    }
    if (!chosen.empty()) ld.levels.emplace_back(idx, std::move(chosen));
  }
  ld.join = acc;
  return ld;
}

Point branch_point(const FiniteFrame& f, const TreeBase& tb, const Mask& chain_nodes) {
  const Tree& t = tb.tree;
  bool maximal = false;
  for (int leaf = 0; leaf < t.size(); ++leaf)
    if (t.is_leaf(leaf) && t.ancestors(leaf) == chain_nodes) {
      maximal = true;
      break;
    }
  if (!maximal)
    throw NotMaximalChainError("branch_point: node set is not a maximal chain of the tree");

  Mask kernel(f.size());
  for (int a = 0; a < f.size(); ++a)
    for (int v = chain_nodes.first(); v != -1; v = chain_nodes.next(v))
      if (f.leq(tb.node_to_element[v], a)) {
        kernel.set(a);
        break;
      }
  if (!is_point(f, kernel))
    throw CrossCheckMismatch("branch_point: induced map is not a frame morphism");
  return Point{kernel};
}

BranchPointMap branch_point_map(const FiniteFrame& f, const TreeBase& tb, const BranchSet& bs) {
  BranchPointMap out;
  for (const Mask& branch : bs.branches) {
    try {
      out.per_branch.push_back(branch_point(f, tb, branch));
    } catch (const CrossCheckMismatch&) {
      out.all_points = false;
      out.per_branch.push_back(Point{Mask(f.size())});
    }
  }

  // continuity: the branches mapped into each node basic form an open set
  for (int node = 0; node < tb.tree.size() && out.continuous; ++node) {
    Mask pre(int(bs.branches.size()));
    for (size_t b = 0; b < bs.branches.size(); ++b)
      if (out.per_branch[b].kernel.test(tb.node_to_element[node])) pre.set(int(b));
    if (bs.find_open(pre) == -1) out.continuous = false;
  }

  std::vector<Mask> kernels;
  for (const Point& p : out.per_branch) kernels.push_back(p.kernel);
  std::sort(kernels.begin(), kernels.end());
  out.injective = std::adjacent_find(kernels.begin(), kernels.end()) == kernels.end();

  std::vector<Point> pts = points(f);
  out.surjective = pts.size() == kernels.size();
  if (out.surjective)
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i].kernel != kernels[i]) {
        out.surjective = false;
        break;
      }
  return out;
}

}  // namespace pointfree
