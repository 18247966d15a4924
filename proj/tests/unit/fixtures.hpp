#pragma once

#include "hecklab/coxeter.hpp"
#include "hecklab/graph.hpp"

namespace hecklab::testing {

// Infinite dihedral group: two generators, m(s,t) infinite.
inline CoxeterSystem dihedralInfinite() {
  return CoxeterSystem({"s", "t"}, {{1, kInfinity}, {kInfinity, 1}});
}

// Free product of l copies of Z2.
inline CoxeterSystem freeProductZ2(int l) {
  std::vector<std::string> gens;
  for (int i = 0; i < l; ++i) gens.push_back(std::string(1, (char)('a' + i)));
  std::vector<std::vector<int>> m(l, std::vector<int>(l, kInfinity));
  for (int i = 0; i < l; ++i) m[i][i] = 1;
  return CoxeterSystem(gens, m);
}

// Two generators with m(s,t) = 3 (Weyl group of A2, order 6).
inline CoxeterSystem a2System() {
  return CoxeterSystem({"s", "t"}, {{1, 3}, {3, 1}});
}

inline SimplicialGraph edgeless3() { return SimplicialGraph({"a", "b", "c"}, {}); }

inline SimplicialGraph pentagonGraph() {
  return SimplicialGraph({"a", "b", "c", "d", "e"},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// Complete graph on a..e plus a vertex f joined to d and e only.
inline SimplicialGraph k5fGraph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
  edges.emplace_back(3, 5);
  edges.emplace_back(4, 5);
  return SimplicialGraph({"a", "b", "c", "d", "e", "f"}, edges);
}

inline CoxeterSystem pentagonRacg() { return CoxeterSystem::rightAngledFromGraph(pentagonGraph()); }
inline CoxeterSystem k5fSystem() { return CoxeterSystem::rightAngledFromGraph(k5fGraph()); }

// Z2^2 * Z2: generators a,b commute, c free.
inline CoxeterSystem z2sqFreeZ2() {
  return CoxeterSystem({"a", "b", "c"},
                       {{1, 2, kInfinity}, {2, 1, kInfinity}, {kInfinity, kInfinity, 1}});
}

}  // namespace hecklab::testing
