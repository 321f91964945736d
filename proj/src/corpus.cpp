#include "pointfree/corpus.hpp"

#include <algorithm>

#include "pointfree/branch.hpp"
#include "pointfree/nonarch.hpp"
#include "pointfree/padic.hpp"

namespace pointfree {

namespace {

Mask atoms_base(const FiniteFrame& f) {
  return f.atoms();
}

Mask mask_of(const FiniteFrame& f, std::initializer_list<int> elems) {
  Mask m(f.size());
  for (int e : elems) m.set(e);
  return m;
}

void add_powerset(Corpus& c, int atoms, int max_size) {
  if ((1 << atoms) > max_size) return;
  FrameInstance inst;
  inst.name = "powerset-" + std::to_string(atoms);
  inst.frame = FiniteFrame::powerset(atoms);
  Mask a = atoms_base(inst.frame);
  Mask with_top = a;
  with_top.set(inst.frame.top());
  inst.bases.push_back(with_top);
  if (atoms >= 1) inst.bases.push_back(a.count() == 1 ? with_top : a);
  if (atoms >= 2) {
    // atoms plus one two-atom block plus top
    auto atom_list = a.bits();
    Mask rich = with_top;
    rich.set(inst.frame.join(atom_list[0], atom_list[1]));
    inst.bases.push_back(rich);
  }
  c.frames.push_back(std::move(inst));
}

void add_chain(Corpus& c, int n) {
  FrameInstance inst;
  inst.name = "chain-" + std::to_string(n);
  inst.frame = FiniteFrame::chain(n);
  Mask nonzero = Mask::full(n);
  if (n > 1) nonzero.reset(inst.frame.bottom());
  inst.bases.push_back(nonzero);
  c.frames.push_back(std::move(inst));
}

void add_tree_frames(Corpus& c, const Tree& t, const std::string& name, int max_size) {
  // Alexandroff frame with the principal-upset base
  uint64_t n_upsets = count_upsets(t.to_poset(), uint64_t(max_size) + 1);
  if (n_upsets <= uint64_t(max_size)) {
    Poset p = t.to_poset();
    UpsetFamily fam = enumerate_upsets(p);
    FrameInstance inst;
    inst.name = name + "-upsets";
    inst.frame = FiniteFrame::alexandroff(fam);
    Mask base(inst.frame.size());
    for (int v = 0; v < t.size(); ++v) base.set(fam.find(p.up(v)));
    inst.bases.push_back(base);
    c.frames.push_back(std::move(inst));
  }
  // branch-space opens frame with the node-basic base
  Mask leaves = t.leaves();
  if ((uint64_t(1) << leaves.count()) <= uint64_t(max_size)) {
    BranchSet bs = branch_space(t);
    FrameInstance inst;
    inst.name = name + "-opens";
    inst.frame = opens_frame(bs);
    Mask base(inst.frame.size());
    for (int v = 0; v < t.size(); ++v) {
      int idx = bs.find_open(bs.basic_open[v]);
      base.set(idx);
    }
    base.set(inst.frame.top());
    inst.bases.push_back(base);
    c.frames.push_back(std::move(inst));
  }
}

}  // namespace

FrameInstance chain_counterexample() {
  FrameInstance inst;
  inst.name = "chain-3-base-m1";
  inst.frame = FiniteFrame::chain(3);
  inst.bases.push_back(mask_of(inst.frame, {1, 2}));
  return inst;
}

std::vector<Mask> random_laminar_bases(const FiniteFrame& f, int count, std::mt19937_64& rng) {
  std::vector<int> atom_elems = f.atoms().bits();
  std::vector<Mask> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    Mask base(f.size());
    for (int a : atom_elems) base.set(a);
    base.set(f.top());
    // recursively split the atom list; each block contributes its join
    struct Split {
      const FiniteFrame& f;
      std::mt19937_64& rng;
      Mask& base;
      void rec(std::vector<int> block) {
        if (block.size() <= 1) return;
        int join = f.bottom();
        for (int a : block) join = f.join(join, a);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) base.set(join);
        std::shuffle(block.begin(), block.end(), rng);
        size_t cut = 1 + std::uniform_int_distribution<size_t>(0, block.size() - 2)(rng);
        rec(std::vector<int>(block.begin(), block.begin() + cut));
        rec(std::vector<int>(block.begin() + cut, block.end()));
      }
    };
    Split{f, rng, base}.rec(atom_elems);
    out.push_back(base);
  }
  return out;
}

Corpus build_corpus(const CorpusOptions& opt) {
  Corpus c;
  for (int atoms = 0; atoms <= 4; ++atoms) add_powerset(c, atoms, opt.max_size);
  for (int n = 1; n <= 5; ++n) add_chain(c, n);

  int shape_counter = 0;
  for (int n = 1; n <= opt.max_tree_nodes; ++n)
    for (const Tree& t : all_tree_shapes(n)) {
      std::string name = "tree-" + std::to_string(n) + "-" + std::to_string(shape_counter++);
      c.trees.push_back(TreeInstance{name, t});
      add_tree_frames(c, t, name, opt.max_size);
    }

  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < opt.random_trees; ++k) {
    int n = 8 + int(rng() % 8);  // 8..15 nodes
    std::vector<int> parent(n, -1);
    for (int v = 1; v < n; ++v) parent[v] = int(rng() % uint64_t(v));
    Tree t = Tree::from_parents(std::move(parent));
    c.trees.push_back(TreeInstance{"random-tree-" + std::to_string(k), t});
  }

  for (long long p : {2ll, 3ll})
    for (int d = 0; d <= 4; ++d) {
      BallTree bt = zp_tree(p, d);
      std::string name = "zp-" + std::to_string(p) + "-" + std::to_string(d);
      c.trees.push_back(TreeInstance{name, bt.tree});
      if (d <= 2) add_tree_frames(c, bt.tree, name, opt.max_size);
    }
  return c;
}

}  // namespace pointfree
