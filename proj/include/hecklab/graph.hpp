#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hecklab {

// Vertex subsets are bitmasks; graphs are capped at 64 vertices.
using VertexSet = std::uint64_t;

inline int setSize(VertexSet s) { return __builtin_popcountll(s); }
inline bool setContains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet setAdd(VertexSet s, int v) { return s | (VertexSet(1) << v); }

// Ascending list of the vertices in a set.
std::vector<int> setElements(VertexSet s);

// Finite simplicial graph: undirected, no loops, no double edges.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  SimplicialGraph(std::vector<std::string> labels,
                  const std::vector<std::pair<int, int>>& edges);

  int vertexCount() const { return (int)labels_.size(); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int indexOf(const std::string& label) const;

  bool adjacent(int v, int w) const { return setContains(adj_[v], w); }
  VertexSet adjacency(int v) const { return adj_[v]; }
  VertexSet allVertices() const {
    return vertexCount() == 64 ? ~VertexSet(0) : (VertexSet(1) << vertexCount()) - 1;
  }

  // Common link; Link(empty set) is the full vertex set.
  VertexSet link(VertexSet xs) const;
  bool isClique(VertexSet xs) const;

  // All cliques including the empty one, sorted by (size, mask).
  std::vector<VertexSet> cliques() const;
  std::vector<VertexSet> cliquesOfSize(int l) const;

  // All ordered pairs of disjoint cliques inside Link(gamma0).
  // Throws std::invalid_argument if gamma0 is not a clique.
  std::vector<std::pair<VertexSet, VertexSet>> comm(VertexSet gamma0) const;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
};

}  // namespace hecklab
