#include "pointfree/nucleus.hpp"

#include <algorithm>
#include <random>

#include "pointfree/nonarch.hpp"

namespace pointfree {

ClosureMap make_closure_map(const FiniteFrame& f, std::vector<int> table) {
  if (int(table.size()) != f.size()) throw Error("closure map: table size mismatch");
  ClosureMap c{&f, std::move(table)};
  for (int a = 0; a < f.size(); ++a) {
    if (c.table[a] < 0 || c.table[a] >= f.size())
      throw Error("closure map: table entry out of range");
    if (!f.leq(a, c.table[a])) throw Error("closure map: not inflationary");
    for (int b = 0; b < f.size(); ++b)
      if (f.leq(a, b) && !f.leq(c.table[a], c.table[b]))
        throw Error("closure map: not monotone");
  }
  return c;
}

ClosureMap identity_map(const FiniteFrame& f) {
  std::vector<int> t(f.size());
  for (int a = 0; a < f.size(); ++a) t[a] = a;
  return ClosureMap{&f, std::move(t)};
}

ClosureMap constant_top_map(const FiniteFrame& f) {
  return ClosureMap{&f, std::vector<int>(f.size(), f.top())};
}

ClosureMap closed_nucleus(const FiniteFrame& f, int u) {
  std::vector<int> t(f.size());
  for (int a = 0; a < f.size(); ++a) t[a] = f.join(u, a);
  return ClosureMap{&f, std::move(t)};
}

ClosureMap open_nucleus(const FiniteFrame& f, int u) {
  std::vector<int> t(f.size());
  for (int a = 0; a < f.size(); ++a) t[a] = f.heyting(u, a);
  return ClosureMap{&f, std::move(t)};
}

NucleusCheck is_nucleus(const ClosureMap& c) {
  const FiniteFrame& f = *c.frame;
  NucleusCheck r;
  for (int a = 0; a < f.size(); ++a)
    if (!f.leq(a, c.apply(a))) {
      r.violated = "inflationary";
      r.witness_a = a;
      return r;
    }
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b)
      if (f.leq(a, b) && !f.leq(c.apply(a), c.apply(b))) {
        r.violated = "monotone";
        r.witness_a = a;
        r.witness_b = b;
        return r;
      }
  for (int a = 0; a < f.size(); ++a)
    for (int b = a; b < f.size(); ++b)
      if (!f.leq(f.meet(c.apply(a), c.apply(b)), c.apply(f.meet(a, b)))) {
        r.violated = "meet";
        r.witness_a = a;
        r.witness_b = b;
        return r;
      }
  for (int a = 0; a < f.size(); ++a)
    if (c.apply(c.apply(a)) != c.apply(a)) {
      r.violated = "idempotent";
      r.witness_a = a;
      return r;
    }
  r.ok = true;
  return r;
}

bool is_prenucleus(const ClosureMap& c) {
  const FiniteFrame& f = *c.frame;
  for (int a = 0; a < f.size(); ++a) {
    if (!f.leq(a, c.apply(a))) return false;
    for (int b = 0; b < f.size(); ++b) {
      if (f.leq(a, b) && !f.leq(c.apply(a), c.apply(b))) return false;
      if (b >= a && !f.leq(f.meet(c.apply(a), c.apply(b)), c.apply(f.meet(a, b)))) return false;
    }
  }
  return true;
}

ClosureMap prenucleus_closure(const ClosureMap& c, int* iterations) {
  if (!is_prenucleus(c)) throw NotPrenucleusError("prenucleus_closure: input is not a prenucleus");
  const FiniteFrame& f = *c.frame;
  // least k with c^k = c^(k+1), counted from the identity
  ClosureMap out = identity_map(f);
  int iters = 0;
  for (;;) {
    bool stable = true;
    std::vector<int> next(f.size());
    for (int a = 0; a < f.size(); ++a) {
      next[a] = c.apply(out.apply(a));
      if (next[a] != out.table[a]) stable = false;
    }
    if (stable) break;
    out.table = std::move(next);
    ++iters;
  }
  if (iterations) *iterations = iters;
  return out;
}

ClosureMap nucleus_meet(const ClosureMap& a, const ClosureMap& b) {
  const FiniteFrame& f = *a.frame;
  std::vector<int> t(f.size());
  for (int x = 0; x < f.size(); ++x) t[x] = f.meet(a.apply(x), b.apply(x));
  return ClosureMap{&f, std::move(t)};
}

ClosureMap nucleus_join(const ClosureMap& a, const ClosureMap& b) {
  const FiniteFrame& f = *a.frame;
  ClosureMap out{&f, std::vector<int>(f.size())};
  for (int x = 0; x < f.size(); ++x) out.table[x] = f.join(a.apply(x), b.apply(x));
  // iterate the pointwise join to idempotence; the result is the assembly join
  for (;;) {
    bool stable = true;
    std::vector<int> next(f.size());
    for (int x = 0; x < f.size(); ++x) {
      next[x] = f.join(a.apply(out.apply(x)), b.apply(out.apply(x)));
      if (next[x] != out.table[x]) stable = false;
    }
    if (stable) break;
    out.table = std::move(next);
  }
  return out;
}

QuotientFrame quotient(const FiniteFrame& f, const ClosureMap& j) {
  NucleusCheck chk = is_nucleus(j);
  if (!chk.ok) throw NotNucleusError("quotient: map violates the " + chk.violated + " axiom");

  QuotientFrame q;
  q.parent = &f;
  q.nucleus = j;
  q.fixed = Mask(f.size());
  for (int a = 0; a < f.size(); ++a)
    if (j.apply(a) == a) q.fixed.set(a);

  q.to_parent = q.fixed.bits();
  const int m = int(q.to_parent.size());
  std::vector<int> rank(f.size(), -1);
  for (int i = 0; i < m; ++i) rank[q.to_parent[i]] = i;

  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = f.label(q.to_parent[i]);
    for (int k = 0; k < m; ++k) leq[i][k] = f.leq(q.to_parent[i], q.to_parent[k]);
  }
  q.frame = FiniteFrame::from_poset(Poset::validate(leq, std::move(labels)));

  q.project.assign(f.size(), -1);
  for (int a = 0; a < f.size(); ++a) q.project[a] = rank[j.apply(a)];

  // the projection must be a surjective frame morphism
  for (int a = 0; a < f.size(); ++a)
    for (int b = a; b < f.size(); ++b) {
      if (q.project[f.meet(a, b)] != q.frame.meet(q.project[a], q.project[b]))
        throw CrossCheckMismatch("quotient: projection does not preserve meets");
      if (q.project[f.join(a, b)] != q.frame.join(q.project[a], q.project[b]))
        throw CrossCheckMismatch("quotient: projection does not preserve joins");
    }
  if (q.project[f.bottom()] != q.frame.bottom() || q.project[f.top()] != q.frame.top())
    throw CrossCheckMismatch("quotient: projection moves the bounds");
  return q;
}

std::vector<ClosureMap> enumerate_nuclei(const FiniteFrame& f, int bound) {
  if (f.size() > bound) throw TooLargeError("enumerate_nuclei: carrier exceeds bound");
  const int n = f.size();

  // heyting rows up front; candidate fixed sets must absorb (a -> s)
  std::vector<std::vector<int>> hey(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) hey[a][b] = f.heyting(a, b);

  std::vector<ClosureMap> out;
  const uint64_t lim = uint64_t(1) << n;
  for (uint64_t bits = 0; bits < lim; ++bits) {
    if (!((bits >> f.top()) & 1)) continue;
    Mask s(n);
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1) s.set(i);
    bool sub = true;
    for (int x = s.first(); x != -1 && sub; x = s.next(x)) {
      for (int y = s.next(x); y != -1; y = s.next(y))
        if (!s.test(f.meet(x, y))) {
          sub = false;
          break;
        }
      if (sub)
        for (int a = 0; a < n; ++a)
          if (!s.test(hey[a][x])) {
            sub = false;
            break;
          }
    }
    if (!sub) continue;
    // j(a) = least fixed element above a
    std::vector<int> table(n);
    for (int a = 0; a < n; ++a) {
      int v = f.top();
      for (int x = s.first(); x != -1; x = s.next(x))
        if (f.leq(a, x)) v = f.meet(v, x);
      table[a] = v;
    }
    ClosureMap j{&f, std::move(table)};
    if (is_nucleus(j).ok) out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ClosureMap& a, const ClosureMap& b) { return a == b; }),
            out.end());
  return out;
}

AssemblyReport verify_assembly(const FiniteFrame& f, const std::vector<ClosureMap>& nuclei,
                               size_t triple_bound, uint64_t seed) {
  AssemblyReport rep;
  const size_t k = nuclei.size();
  auto find = [&](const ClosureMap& c) {
    return std::binary_search(nuclei.begin(), nuclei.end(), c);
  };

  std::vector<std::vector<int>> meet_idx(k, std::vector<int>(k)), join_idx(k, std::vector<int>(k));
  auto index_of = [&](const ClosureMap& c) {
    auto it = std::lower_bound(nuclei.begin(), nuclei.end(), c);
    return it != nuclei.end() && *it == c ? int(it - nuclei.begin()) : -1;
  };
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      ClosureMap m = nucleus_meet(nuclei[i], nuclei[j]);
      ClosureMap jo = nucleus_join(nuclei[i], nuclei[j]);
      if (!find(m)) rep.closed_under_meet = false;
      if (!find(jo)) rep.closed_under_join = false;
      meet_idx[i][j] = meet_idx[j][i] = index_of(m);
      join_idx[i][j] = join_idx[j][i] = index_of(jo);
    }

  auto check_triple = [&](size_t a, size_t x, size_t y) {
    ++rep.triples_checked;
    int xy = join_idx[x][y], ax = meet_idx[a][x], ay = meet_idx[a][y];
    if (xy < 0 || ax < 0 || ay < 0) {
      rep.distributive = false;
      return;
    }
    if (meet_idx[a][xy] != join_idx[ax][ay]) rep.distributive = false;
  };

  if (k <= triple_bound) {
    for (size_t a = 0; a < k; ++a)
      for (size_t x = 0; x < k; ++x)
        for (size_t y = x; y < k; ++y) check_triple(a, x, y);
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, k - 1);
    for (int t = 0; t < 20000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }
  return rep;
}

std::vector<QuotVerification> verify_quot(const FiniteFrame& f, const BaseSet& base,
                                          const std::vector<ClosureMap>& nuclei) {
  if (!check_nonarch_base(f, base).holds)
    throw NotNonArchError("verify_quot: base is not non-archimedean");

  std::vector<QuotVerification> out;
  out.reserve(nuclei.size());
  for (size_t idx = 0; idx < nuclei.size(); ++idx) {
    QuotientFrame q = quotient(f, nuclei[idx]);
    QuotVerification v;
    v.nucleus_index = int(idx);

    Mask image(q.frame.size());
    for (int b = base.members.first(); b != -1; b = base.members.next(b))
      image.set(q.project_of(b));
    v.image_base = image.bits();

    v.base_law = q.frame.is_base(image);
    v.trichotomy = true;
    for (int i = image.first(); i != -1 && v.trichotomy; i = image.next(i))
      for (int j = image.next(i); j != -1; j = image.next(j))
        if (classify_pair(q.frame, i, j) == PairClass::Incomparable) {
          v.trichotomy = false;
          break;
        }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace pointfree
