#include "hecklab/words.hpp"

#include <algorithm>
#include <set>

namespace hecklab {

Letters graphReduce(const SimplicialGraph& g, Letters w) {
  Letters out;
  out.reserve(w.size());
  for (int s : w) {
    bool cancelled = false;
    for (int i = (int)out.size() - 1; i >= 0; --i) {
      if (out[i] == s) {
        out.erase(out.begin() + i);
        cancelled = true;
        break;
      }
      if (!g.adjacent(out[i], s)) break;
    }
    if (!cancelled) out.push_back(s);
  }
  return traceNormalForm(g, out);
}

bool graphWordReduced(const SimplicialGraph& g, const Letters& w) {
  Letters out;
  for (int s : w) {
    bool cancelled = false;
    for (int i = (int)out.size() - 1; i >= 0; --i) {
      if (out[i] == s) {
        out.erase(out.begin() + i);
        cancelled = true;
        break;
      }
      if (!g.adjacent(out[i], s)) break;
    }
    if (cancelled) return false;
    out.push_back(s);
  }
  return true;
}

std::pair<Letters, std::vector<int>> traceNormalFormWithPerm(const SimplicialGraph& g,
                                                             const Letters& w) {
  const int n = (int)w.size();
  std::vector<bool> used(n, false);
  Letters nf;
  std::vector<int> perm;
  nf.reserve(n);
  perm.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool available = true;
      for (int j = 0; j < i && available; ++j)
        if (!used[j] && (w[j] == w[i] || !g.adjacent(w[j], w[i]))) available = false;
      if (available && (best < 0 || w[i] < w[best])) best = i;
    }
    used[best] = true;
    nf.push_back(w[best]);
    perm.push_back(best);
  }
  return {nf, perm};
}

Letters traceNormalForm(const SimplicialGraph& g, const Letters& w) {
  return traceNormalFormWithPerm(g, w).first;
}

bool wordStartsWith(const SimplicialGraph& g, const Letters& w, int s) {
  for (int letter : w) {
    if (letter == s) return true;
    if (!g.adjacent(letter, s)) return false;
  }
  return false;
}

bool wordEndsWith(const SimplicialGraph& g, const Letters& w, int s) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == s) return true;
    if (!g.adjacent(*it, s)) return false;
  }
  return false;
}

std::vector<std::vector<int>> shufflePermutations(const SimplicialGraph& g, const Letters& w) {
  const int n = (int)w.size();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> cur = queue[head];
    for (int i = 0; i + 1 < n; ++i) {
      int a = w[cur[i]], b = w[cur[i + 1]];
      if (a != b && g.adjacent(a, b)) {
        std::vector<int> next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return queue;
}

Letters applyPermutation(const Letters& w, const std::vector<int>& perm) {
  Letters out(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) out[i] = w[perm[i]];
  return out;
}

}  // namespace hecklab
