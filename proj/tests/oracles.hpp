#pragma once

// Independent brute-force oracles for the unit and acceptance tests. These
// stay deliberately naive and share no code path with the library routines
// they check.

#include <vector>

#include "pointfree/frame.hpp"
#include "pointfree/poset.hpp"
#include "pointfree/tree.hpp"

namespace oracle {

using pointfree::FiniteFrame;
using pointfree::Mask;
using pointfree::Poset;
using pointfree::Tree;

// Every subset, filtered for upward closure by the raw definition.
inline std::vector<Mask> upsets_by_filter(const Poset& p) {
  std::vector<Mask> out;
  const uint64_t lim = uint64_t(1) << p.size();
  for (uint64_t bits = 0; bits < lim; ++bits) {
    Mask m(p.size());
    for (int i = 0; i < p.size(); ++i)
      if ((bits >> i) & 1) m.set(i);
    bool up = true;
    for (int a = 0; a < p.size() && up; ++a)
      for (int b = 0; b < p.size(); ++b)
        if (m.test(a) && p.leq(a, b) && !m.test(b)) {
          up = false;
          break;
        }
    if (up) out.push_back(m);
  }
  return out;
}

// Every subset, filtered for being a non-extendable chain.
inline std::vector<Mask> maximal_chains_by_filter(const Poset& p) {
  std::vector<Mask> out;
  const uint64_t lim = uint64_t(1) << p.size();
  for (uint64_t bits = 1; bits < lim; ++bits) {
    Mask m(p.size());
    for (int i = 0; i < p.size(); ++i)
      if ((bits >> i) & 1) m.set(i);
    if (!p.is_chain(m)) continue;
    bool extendable = false;
    for (int x = 0; x < p.size() && !extendable; ++x) {
      if (m.test(x)) continue;
      bool comparable_with_all = true;
      for (int y = m.first(); y != -1; y = m.next(y))
        if (!p.leq(x, y) && !p.leq(y, x)) {
          comparable_with_all = false;
          break;
        }
      extendable = comparable_with_all;
    }
    if (!extendable) out.push_back(m);
  }
  return out;
}

// Largest x with x /\ a <= b by direct scan for the maximum.
inline int heyting_by_scan(const FiniteFrame& f, int a, int b) {
  int best = -1;
  for (int x = 0; x < f.size(); ++x) {
    if (!f.leq(f.meet(x, a), b)) continue;
    if (best == -1 || f.leq(best, x)) best = x;
  }
  return best;
}

// All nuclei by scanning every self-map; n^n growth, keep n small.
inline uint64_t count_nuclei_by_scan(const FiniteFrame& f) {
  const int n = f.size();
  std::vector<int> table(n, 0);
  uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!f.leq(a, table[a]) || table[table[a]] != table[a]) ok = false;
      for (int b = 0; b < n && ok; ++b) {
        if (f.leq(a, b) && !f.leq(table[a], table[b])) ok = false;
        if (!f.leq(f.meet(table[a], table[b]), table[f.meet(a, b)])) ok = false;
      }
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < n && ++table[pos] == n) table[pos++] = 0;
    if (pos == n) break;
  }
  return count;
}

// Membership of k * p^grid_exp in c + p^m Zp via plain modular arithmetic on
// scaled integers.
inline bool ball_member_by_modulus(long long p, long long center_scaled, int m, long long k,
                                   int grid_exp, int span) {
  // everything scaled by p^-grid_exp: x = k, center = center_scaled,
  // modulus = p^(m - grid_exp)
  long long mod = 1;
  for (int i = 0; i < m - grid_exp; ++i) mod *= p;
  long long diff = (k - center_scaled) % mod;
  (void)span;
  return diff == 0;
}

// Rank by stripping maximal elements of the complement down-sets.
inline int cb_rank_by_downsets(const Tree& t) {
  std::vector<char> alive(t.size(), 1);
  int steps = 0;
  for (;;) {
    bool any = false;
    for (int v = 0; v < t.size(); ++v)
      if (alive[v]) any = true;
    if (!any) return steps;
    std::vector<char> next(t.size(), 0);
    for (int v = 0; v < t.size(); ++v) {
      if (!alive[v]) continue;
      for (int w = 0; w < t.size(); ++w)
        if (w != v && alive[w] && t.is_ancestor(v, w)) {
          next[v] = 1;  // v has a live strict descendant: still a limit point
          break;
        }
    }
    alive = next;
    ++steps;
  }
}

}  // namespace oracle
