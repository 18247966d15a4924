#include "hecklab/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "hecklab/numeric.hpp"

namespace hecklab {

const char* coxeterTypeName(CoxeterType t) {
  switch (t) {
    case CoxeterType::Spherical: return "spherical";
    case CoxeterType::Affine: return "affine";
    default: return "non-affine";
  }
}

namespace {

SimplicialGraph commutationGraphOf(const std::vector<std::string>& gens,
                                   const std::vector<std::vector<int>>& m) {
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < (int)gens.size(); ++s)
    for (int t = s + 1; t < (int)gens.size(); ++t)
      if (m[s][t] == 2) edges.emplace_back(s, t);
  return SimplicialGraph(gens, edges);
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators,
                             std::vector<std::vector<int>> exponents, int generalWordCap)
    : gens_(std::move(generators)), m_(std::move(exponents)), wordCap_(generalWordCap) {
  const int n = rank();
  if ((int)m_.size() != n) throw std::invalid_argument("coxeter: exponent matrix shape");
  for (int s = 0; s < n; ++s) {
    if ((int)m_[s].size() != n) throw std::invalid_argument("coxeter: exponent matrix shape");
    if (m_[s][s] != 1) throw std::invalid_argument("coxeter: m(s,s) must be 1");
    for (int t = 0; t < n; ++t) {
      if (m_[s][t] != m_[t][s]) throw std::invalid_argument("coxeter: exponent matrix not symmetric");
      if (s != t && m_[s][t] != kInfinity && m_[s][t] < 2)
        throw std::invalid_argument("coxeter: off-diagonal exponents must be >= 2 or infinite");
    }
  }
  rightAngled_ = true;
  for (int s = 0; s < n && rightAngled_; ++s)
    for (int t = s + 1; t < n; ++t)
      if (m_[s][t] != 2 && m_[s][t] != kInfinity) {
        rightAngled_ = false;
        break;
      }
  commGraph_ = commutationGraphOf(gens_, m_);
}

CoxeterSystem CoxeterSystem::rightAngledFromGraph(const SimplicialGraph& g) {
  const int n = g.vertexCount();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, kInfinity));
  for (int s = 0; s < n; ++s) {
    m[s][s] = 1;
    for (int t = 0; t < n; ++t)
      if (t != s && g.adjacent(s, t)) m[s][t] = 2;
  }
  return CoxeterSystem(g.labels(), std::move(m));
}

int CoxeterSystem::indexOf(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (gens_[i] == label) return i;
  return -1;
}

GroupElement CoxeterSystem::element(Letters word) const {
  GroupElement g = reduce(word);
  if (g.nf != word) throw std::invalid_argument("element: word is not a canonical normal form");
  return g;
}

GroupElement CoxeterSystem::reduce(const Letters& word) const {
  for (int s : word)
    if (s < 0 || s >= rank()) throw std::invalid_argument("reduce: letter out of range");
  if (rightAngled_) return {graphReduce(commGraph_, word)};
  return {reduceGeneral(word)};
}

std::vector<Letters> CoxeterSystem::braidClass(const Letters& word) const {
  std::set<Letters> seen{word};
  std::vector<Letters> queue{word};
  for (size_t head = 0; head < queue.size(); ++head) {
    Letters u = queue[head];
    const int n = (int)u.size();
    for (int i = 0; i < n; ++i) {
      for (int t = 0; t < rank(); ++t) {
        if (t == u[i]) continue;
        int mm = m_[u[i]][t];
        if (mm == kInfinity || i + mm > n) continue;
        bool alternating = true;
        for (int j = 0; j < mm && alternating; ++j)
          alternating = (u[i + j] == ((j % 2 == 0) ? u[i] : t));
        if (!alternating) continue;
        Letters v = u;
        for (int j = 0; j < mm; ++j) v[i + j] = (j % 2 == 0) ? t : u[i];
        if (seen.insert(v).second) {
          queue.push_back(v);
          if (seen.size() > 2000000) throw ResourceLimitError("braid class too large");
        }
      }
    }
  }
  return queue;
}

Letters CoxeterSystem::reduceGeneral(Letters word) const {
  if ((int)word.size() > wordCap_)
    throw ResourceLimitError("word length exceeds the general-type reduction cap (" +
                             std::to_string(wordCap_) + ")");
  {
    std::lock_guard<std::mutex> lock(memoMutex_);
    auto it = reduceMemo_.find(word);
    if (it != reduceMemo_.end()) return it->second;
  }
  Letters original = word;
  // Tits: a word is reduced iff no member of its braid class has an adjacent
  // equal pair; otherwise delete such a pair and start over.
  for (;;) {
    std::vector<Letters> cls = braidClass(word);
    bool deleted = false;
    for (const Letters& u : cls) {
      for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == u[i + 1]) {
          Letters shorter(u.begin(), u.begin() + i);
          shorter.insert(shorter.end(), u.begin() + i + 2, u.end());
          word = std::move(shorter);
          deleted = true;
          break;
        }
      }
      if (deleted) break;
    }
    if (!deleted) {
      Letters best = *std::min_element(cls.begin(), cls.end());
      std::lock_guard<std::mutex> lock(memoMutex_);
      reduceMemo_.emplace(std::move(original), best);
      return best;
    }
  }
}

GroupElement CoxeterSystem::multiply(const GroupElement& a, const GroupElement& b) const {
  Letters w = a.nf;
  w.insert(w.end(), b.nf.begin(), b.nf.end());
  return reduce(w);
}

GroupElement CoxeterSystem::leftMultiply(int s, const GroupElement& g) const {
  Letters w;
  w.reserve(g.nf.size() + 1);
  w.push_back(s);
  w.insert(w.end(), g.nf.begin(), g.nf.end());
  return reduce(w);
}

GroupElement CoxeterSystem::inverse(const GroupElement& g) const {
  Letters w(g.nf.rbegin(), g.nf.rend());
  return reduce(w);
}

bool CoxeterSystem::startsWith(const GroupElement& g, int s) const {
  if (s < 0 || s >= rank()) throw std::invalid_argument("startsWith: generator out of range");
  if (rightAngled_) return wordStartsWith(commGraph_, g.nf, s);
  return leftMultiply(s, g).length() < g.length();
}

bool CoxeterSystem::endsWith(const GroupElement& g, int s) const {
  if (s < 0 || s >= rank()) throw std::invalid_argument("endsWith: generator out of range");
  if (rightAngled_) return wordEndsWith(commGraph_, g.nf, s);
  return multiply(g, GroupElement{{s}}).length() < g.length();
}

std::size_t CoxeterSystem::defaultBallCap() {
  if (const char* env = std::getenv("HECKLAB_MAX_BALL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return (std::size_t)v;
  }
  return 2000000;
}

std::vector<GroupElement> CoxeterSystem::ball(int radius, std::size_t capElements) const {
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  std::set<GroupElement> seen{identity()};
  std::vector<GroupElement> frontier{identity()};
  for (int len = 1; len <= radius && !frontier.empty(); ++len) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : frontier) {
      for (int s = 0; s < rank(); ++s) {
        GroupElement h = leftMultiply(s, g);
        if (h.length() != len) continue;
        if (seen.insert(h).second) {
          next.push_back(h);
          if (seen.size() > capElements)
            throw ResourceLimitError("ball enumeration exceeds configured cap");
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> CoxeterSystem::generatorConjugacyClasses() const {
  std::vector<int> parent(rank());
  for (int i = 0; i < rank(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < rank(); ++s)
    for (int t = s + 1; t < rank(); ++t)
      if (m_[s][t] != kInfinity && m_[s][t] % 2 == 1) parent[find(s)] = find(t);
  std::map<int, std::vector<int>> groups;
  for (int s = 0; s < rank(); ++s) groups[find(s)].push_back(s);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoxeterSystem::Component> CoxeterSystem::irreducibleComponents(
    double eigenTolerance) const {
  const int n = rank();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int t = 0; t < n; ++t) {
        // Coxeter diagram edge: m >= 3 or infinite.
        if (t != v && comp[t] < 0 && m_[v][t] != 2 && m_[v][t] != 1) {
          comp[t] = count;
          stack.push_back(t);
        }
      }
    }
    ++count;
  }
  std::vector<Component> out(count);
  for (int s = 0; s < n; ++s) out[comp[s]].generators.push_back(s);
  for (Component& c : out) {
    const int k = (int)c.generators.size();
    std::vector<std::vector<double>> gram(k, std::vector<double>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        int mm = m_[c.generators[i]][c.generators[j]];
        gram[i][j] = (i == j) ? 1.0 : (mm == kInfinity ? -1.0 : -std::cos(M_PI / mm));
      }
    }
    c.gramEigenvalues = symmetricEigenvalues(gram);
    double lo = c.gramEigenvalues.front();
    if (lo > eigenTolerance)
      c.type = CoxeterType::Spherical;
    else if (lo >= -eigenTolerance)
      c.type = CoxeterType::Affine;
    else
      c.type = CoxeterType::NonAffine;
  }
  return out;
}

std::string wordToString(const CoxeterSystem& sys, const Letters& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += sys.generatorLabel(w[i]);
  }
  return out;
}

}  // namespace hecklab
