#pragma once

// Test-only reference implementations. Everything here deliberately avoids
// the library's fast paths: products go through element composition plus a
// linear scan for the index, closures are run to a fixpoint over all pairs,
// and the series use all-pairs commutators instead of normal closures of
// generator commutators. Slow, small, and independent.

#include <map>
#include <set>
#include <vector>

#include "solvagraph/group.hpp"
#include "solvagraph/solvabilizer.hpp"

namespace oracle {

using solvagraph::FiniteGroup;
using solvagraph::GroupElement;

inline int naive_mult(const FiniteGroup& g, int i, int j) {
  GroupElement prod = g.element(i).compose(g.element(j));
  for (int k = 0; k < g.order(); ++k)
    if (g.element(k) == prod) return k;
  return -1;
}

inline int naive_inverse(const FiniteGroup& g, int i) {
  for (int k = 0; k < g.order(); ++k)
    if (naive_mult(g, i, k) == 0) return k;
  return -1;
}

// Fixpoint closure: multiply all pairs until nothing new appears.
inline std::set<int> naive_closure(const FiniteGroup& g, const std::set<int>& seed) {
  std::set<int> s = seed;
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members(s.begin(), s.end());
    for (int a : members)
      for (int b : members)
        if (s.insert(g.mult(a, b)).second) grew = true;
  }
  return s;
}

inline std::set<int> naive_derived_subgroup(const FiniteGroup& g, const std::set<int>& h) {
  std::set<int> comms;
  for (int a : h)
    for (int b : h) comms.insert(g.commutator(a, b));
  return naive_closure(g, comms);
}

inline bool naive_is_solvable(const FiniteGroup& g, std::set<int> h) {
  while (h.size() > 1) {
    std::set<int> next = naive_derived_subgroup(g, h);
    if (next == h) return false;
    h = std::move(next);
  }
  return true;
}

inline bool naive_is_nilpotent(const FiniteGroup& g, const std::set<int>& h) {
  std::set<int> gamma = h;
  while (gamma.size() > 1) {
    std::set<int> comms;
    for (int a : h)
      for (int b : gamma) comms.insert(g.commutator(a, b));
    std::set<int> next = naive_closure(g, comms);
    if (next == gamma) return false;
    gamma = std::move(next);
  }
  return true;
}

inline bool naive_pair_solvable(const FiniteGroup& g, int i, int j) {
  return naive_is_solvable(g, naive_closure(g, {i, j}));
}

inline std::vector<bool> naive_sol_row(const FiniteGroup& g, int x) {
  std::vector<bool> row(g.order());
  for (int i = 0; i < g.order(); ++i) row[i] = naive_pair_solvable(g, i, x);
  return row;
}

inline std::set<int> naive_centralizer(const FiniteGroup& g, int x) {
  std::set<int> out;
  for (int i = 0; i < g.order(); ++i)
    if (naive_mult(g, i, x) == naive_mult(g, x, i)) out.insert(i);
  return out;
}

inline std::vector<std::set<int>> naive_conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::set<int>> classes;
  std::vector<char> seen(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int c = 0; c < g.order(); ++c) cls.insert(g.mult(g.mult(c, x), g.inverse(c)));
    for (int y : cls) seen[y] = 1;
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Degree multiset of the full non-solvable graph by the all-pairs sweep.
inline std::map<int, int> naive_degree_multiset(const FiniteGroup& g) {
  std::map<int, int> m;
  for (int x = 0; x < g.order(); ++x) {
    int deg = 0;
    for (int y = 0; y < g.order(); ++y)
      if (y != x && !naive_pair_solvable(g, x, y)) ++deg;
    ++m[deg];
  }
  return m;
}

}  // namespace oracle
