#include "hecklab/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hecklab {

std::vector<int> setElements(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = __builtin_ctzll(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
  if (labels_.size() > 64) throw std::invalid_argument("graph: more than 64 vertices");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("graph: duplicate vertex label '" + l + "'");
  for (auto [v, w] : edges) {
    if (v < 0 || w < 0 || v >= vertexCount() || w >= vertexCount())
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (v == w) throw std::invalid_argument("graph: loop edge (v,v) not allowed");
    adj_[v] = setAdd(adj_[v], w);
    adj_[w] = setAdd(adj_[w], v);
  }
}

int SimplicialGraph::indexOf(const std::string& label) const {
  for (int i = 0; i < vertexCount(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

VertexSet SimplicialGraph::link(VertexSet xs) const {
  VertexSet out = allVertices();
  for (int v : setElements(xs)) out &= adj_[v];
  return out;
}

bool SimplicialGraph::isClique(VertexSet xs) const {
  auto vs = setElements(xs);
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!adjacent(vs[i], vs[j])) return false;
  return true;
}

std::vector<VertexSet> SimplicialGraph::cliques() const {
  std::vector<VertexSet> out{0};
  // Extend each clique by vertices above its maximum element.
  for (size_t head = 0; head < out.size(); ++head) {
    VertexSet c = out[head];
    int lo = c ? 64 - __builtin_clzll(c) : 0;
    for (int v = lo; v < vertexCount(); ++v) {
      if ((adj_[v] & c) == c) out.push_back(setAdd(c, v));
    }
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    int sa = setSize(a), sb = setSize(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

std::vector<VertexSet> SimplicialGraph::cliquesOfSize(int l) const {
  std::vector<VertexSet> out;
  for (VertexSet c : cliques())
    if (setSize(c) == l) out.push_back(c);
  return out;
}

std::vector<std::pair<VertexSet, VertexSet>> SimplicialGraph::comm(VertexSet gamma0) const {
  if (!isClique(gamma0)) throw std::invalid_argument("comm: gamma0 is not a clique");
  VertexSet lk = link(gamma0);
  std::vector<VertexSet> inside;
  for (VertexSet c : cliques())
    if ((c & ~lk) == 0) inside.push_back(c);
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (VertexSet a : inside)
    for (VertexSet b : inside)
      if ((a & b) == 0) out.emplace_back(a, b);
  return out;
}

}  // namespace hecklab
