#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "hecklab/coxeter.hpp"
#include "hecklab/hecke.hpp"
#include "hecklab/sparse.hpp"
#include "hecklab/words.hpp"

namespace hecklab {

// Finite slice of l2(W): all elements of length <= radius in the canonical
// (length, lex) order.
class BallBasis {
 public:
  BallBasis(const CoxeterSystem& sys, int radius,
            std::size_t capElements = CoxeterSystem::defaultBallCap());

  const CoxeterSystem& system() const { return *sys_; }
  int radius() const { return radius_; }
  int size() const { return (int)elements_.size(); }
  const GroupElement& element(int i) const { return elements_[i]; }
  int indexOf(const GroupElement& g) const;
  const std::vector<int>& lengths() const { return lengths_; }

 private:
  const CoxeterSystem* sys_;
  int radius_;
  std::vector<GroupElement> elements_;
  std::map<GroupElement, int> index_;
  std::vector<int> lengths_;
};

// T_s delta_w = delta_{sw}, plus p_s(q) delta_w when the length drops;
// targets outside the ball are dropped (compression).
template <class S>
SparseOperator<S> generatorMatrix(const BallBasis& basis, int s, const MultiParameter& q) {
  SparseOperator<S> out(basis.size(), basis.size());
  const S p = psScalar<S>(q, s);
  for (int i = 0; i < basis.size(); ++i) {
    const GroupElement& w = basis.element(i);
    GroupElement sw = basis.system().leftMultiply(s, w);
    int j = basis.indexOf(sw);
    if (j >= 0) out.add(j, i, ScalarOps<S>::one());
    if (sw.length() < w.length()) out.add(i, i, p);
  }
  return out;
}

// Diagonal projection onto words starting with s (the descent set of s).
template <class S>
SparseOperator<S> descentProjection(const BallBasis& basis, int s) {
  SparseOperator<S> out(basis.size(), basis.size());
  for (int i = 0; i < basis.size(); ++i)
    if (basis.system().startsWith(basis.element(i), s))
      out.add(i, i, ScalarOps<S>::one());
  return out;
}

// Matrix of a symbolic element: product of generator matrices along each
// normal form, extended linearly. Entries are exact on the window of rows
// and columns of length <= radius - maxLength(x).
template <class S>
SparseOperator<S> representElement(const HeckeElement<S>& x, const BallBasis& basis) {
  if (x.maxLength() > basis.radius())
    throw std::invalid_argument("representElement: support degree exceeds the ball radius");
  SparseOperator<S> out(basis.size(), basis.size());
  std::map<int, SparseOperator<S>> generatorCache;
  auto gen = [&](int s) -> const SparseOperator<S>& {
    auto it = generatorCache.find(s);
    if (it == generatorCache.end())
      it = generatorCache.emplace(s, generatorMatrix<S>(basis, s, x.q)).first;
    return it->second;
  };
  for (const auto& [w, c] : x.coeff) {
    SparseOperator<S> m = SparseOperator<S>::identity(basis.size());
    for (auto it = w.nf.rbegin(); it != w.nf.rend(); ++it) m = gen(*it) * m;
    out = out + m.scaled(c);
  }
  return out;
}

// One vertex algebra element, reduced to what the Fock-space action needs:
// phi(a), the coefficients of a(1)° over the mean-zero basis, the
// annihilation amplitudes, and the compression of multiplication by a to
// the mean-zero subspace.
template <class S>
struct VertexElement {
  S mean = ScalarOps<S>::zero();
  std::vector<S> create;                 // <a omega, e_c>
  std::vector<S> annihilate;             // <a e_c, omega>
  std::vector<std::vector<S>> compress;  // [c'][c] = <a e_c, e_c'> (mean-zero part)
};

// The Hecke vertex algebra C*_{q_s}(Z2) has one-dimensional mean-zero part
// spanned by T_s itself; its action data is fully described by p_s(q).
template <class S>
VertexElement<S> heckeVertexElement(const S& p) {
  VertexElement<S> e;
  e.create = {ScalarOps<S>::one()};
  e.annihilate = {ScalarOps<S>::one()};
  e.compress = {{p}};
  return e;
}

// Finite-dimensional abelian vertex algebra C(X) with a faithful state:
// point weights plus an orthonormal basis of the mean-zero subspace.
struct AbelianVertexAlgebra {
  int pointCount;
  std::vector<double> weights;
  std::vector<std::vector<double>> meanZeroBasis;  // (pointCount-1) value vectors

  AbelianVertexAlgebra(int points, std::vector<double> stateWeights);

  int reducedDim() const { return pointCount - 1; }
  VertexElement<std::complex<double>> element(const std::vector<double>& pointValues) const;
  std::vector<double> meanZeroValues(const std::vector<double>& pointValues) const;
};

// Weights of the Hecke vertex algebra at parameter q: (1/(1+q), q/(1+q)).
AbelianVertexAlgebra heckeVertexAlgebra(double q);

struct FockItem {
  Letters word;
  std::vector<int> comps;

  friend bool operator<(const FockItem& a, const FockItem& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.comps < b.comps;
  }
  friend bool operator==(const FockItem& a, const FockItem& b) {
    return a.word == b.word && a.comps == b.comps;
  }
};

// Truncated Fock space of a graph product (words = shuffle-class
// representatives) or of the free product over the same vertices (words =
// adjacent-distinct sequences), with one tensor slot per letter.
template <class S>
class FockSpace {
 public:
  enum class Kind { GraphProduct, FreeProduct };

  FockSpace(Kind kind, const SimplicialGraph& g, std::vector<int> reducedDims, int maxLength,
            std::size_t capItems = 4000000);

  Kind kind() const { return kind_; }
  bool freeMode() const { return kind_ == Kind::FreeProduct; }
  const SimplicialGraph& graph() const { return *graph_; }
  int maxLength() const { return maxLength_; }
  int size() const { return (int)items_.size(); }
  const FockItem& item(int i) const { return items_[i]; }
  int indexOf(const FockItem& it) const;
  const std::vector<int>& lengths() const { return lengths_; }

  SparseOperator<S> vertexOperator(int v, const VertexElement<S>& a) const;
  SparseOperator<S> startProjection(int v) const;

  // Free-product only: projection onto words literally starting with the
  // representative word of the clique, and the diagonal operator
  // Diag(a_1, ..., a_l) acting on those words.
  SparseOperator<S> cliquePrefixProjection(VertexSet gamma0) const;
  SparseOperator<S> diagOperator(VertexSet gamma0,
                                 const std::vector<VertexElement<S>>& elems) const;

  Letters cliqueWord(VertexSet gamma0) const;

 private:
  Kind kind_;
  const SimplicialGraph* graph_;
  std::vector<int> reducedDims_;
  int maxLength_;
  std::vector<FockItem> items_;
  std::map<FockItem, int> index_;
  std::vector<int> lengths_;

  void expandComps(const Letters& word, std::size_t capItems);
};

template <class S>
FockSpace<S>::FockSpace(Kind kind, const SimplicialGraph& g, std::vector<int> reducedDims,
                        int maxLength, std::size_t capItems)
    : kind_(kind), graph_(&g), reducedDims_(std::move(reducedDims)), maxLength_(maxLength) {
  if ((int)reducedDims_.size() != g.vertexCount())
    throw std::invalid_argument("fock: one reduced dimension per vertex required");
  for (int d : reducedDims_)
    if (d < 1) throw std::invalid_argument("fock: reduced dimensions must be >= 1");

  std::vector<Letters> words{{}};
  std::set<Letters> seen{{}};
  std::vector<Letters> frontier{{}};
  for (int len = 1; len <= maxLength_; ++len) {
    std::vector<Letters> next;
    for (const Letters& w : frontier) {
      for (int v = 0; v < g.vertexCount(); ++v) {
        Letters candidate;
        if (freeMode()) {
          if (!w.empty() && w.front() == v) continue;
          candidate.reserve(w.size() + 1);
          candidate.push_back(v);
          candidate.insert(candidate.end(), w.begin(), w.end());
        } else {
          if (wordStartsWith(g, w, v)) continue;
          candidate.push_back(v);
          candidate.insert(candidate.end(), w.begin(), w.end());
          candidate = traceNormalForm(g, candidate);
        }
        if (seen.insert(candidate).second) next.push_back(candidate);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(words.begin(), words.end(), [](const Letters& a, const Letters& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const Letters& w : words) expandComps(w, capItems);
  for (int i = 0; i < (int)items_.size(); ++i) {
    index_.emplace(items_[i], i);
    lengths_.push_back((int)items_[i].word.size());
  }
}

template <class S>
void FockSpace<S>::expandComps(const Letters& word, std::size_t capItems) {
  std::vector<int> comps(word.size(), 0);
  for (;;) {
    items_.push_back({word, comps});
    if (items_.size() > capItems) throw ResourceLimitError("fock: dimension cap exceeded");
    int i = (int)word.size() - 1;
    while (i >= 0 && comps[i] + 1 >= reducedDims_[word[i]]) comps[i--] = 0;
    if (i < 0) break;
    comps[i]++;
  }
}

template <class S>
int FockSpace<S>::indexOf(const FockItem& it) const {
  auto found = index_.find(it);
  return found == index_.end() ? -1 : found->second;
}

template <class S>
SparseOperator<S> FockSpace<S>::vertexOperator(int v, const VertexElement<S>& a) const {
  const SimplicialGraph& g = *graph_;
  const int rdim = reducedDims_[v];
  if ((int)a.create.size() != rdim || (int)a.annihilate.size() != rdim ||
      (int)a.compress.size() != rdim)
    throw std::invalid_argument("vertexOperator: element dimensions mismatch");
  SparseOperator<S> out(size(), size());
  for (int i = 0; i < size(); ++i) {
    const FockItem& it = items_[i];
    const bool starts =
        freeMode() ? (!it.word.empty() && it.word.front() == v) : wordStartsWith(g, it.word, v);
    if (!starts) {
      if (!ScalarOps<S>::prune(a.mean)) out.add(i, i, a.mean);
      if ((int)it.word.size() + 1 <= maxLength_) {
        Letters raw;
        raw.reserve(it.word.size() + 1);
        raw.push_back(v);
        raw.insert(raw.end(), it.word.begin(), it.word.end());
        Letters nf = raw;
        std::vector<int> perm(raw.size());
        if (freeMode()) {
          for (size_t k = 0; k < perm.size(); ++k) perm[k] = (int)k;
        } else {
          std::tie(nf, perm) = traceNormalFormWithPerm(g, raw);
        }
        for (int c = 0; c < rdim; ++c) {
          if (ScalarOps<S>::prune(a.create[c])) continue;
          std::vector<int> rawComps;
          rawComps.reserve(raw.size());
          rawComps.push_back(c);
          rawComps.insert(rawComps.end(), it.comps.begin(), it.comps.end());
          std::vector<int> comps(raw.size());
          for (size_t k = 0; k < raw.size(); ++k) comps[k] = rawComps[perm[k]];
          int j = indexOf({nf, comps});
          if (j >= 0) out.add(j, i, a.create[c]);
        }
      }
      continue;
    }
    // First occurrence of v reachable by shuffles (position 0 in free mode).
    int p = 0;
    if (!freeMode())
      while (it.word[p] != v) ++p;
    const int c0 = it.comps[p];
    for (int c = 0; c < rdim; ++c) {
      const S& m = a.compress[c][c0];
      if (ScalarOps<S>::prune(m)) continue;
      FockItem target = it;
      target.comps[p] = c;
      out.add(indexOf(target), i, m);
    }
    if (!ScalarOps<S>::prune(a.annihilate[c0])) {
      Letters raw = it.word;
      raw.erase(raw.begin() + p);
      std::vector<int> rawComps = it.comps;
      rawComps.erase(rawComps.begin() + p);
      Letters nf = raw;
      std::vector<int> perm(raw.size());
      if (freeMode()) {
        for (size_t k = 0; k < perm.size(); ++k) perm[k] = (int)k;
      } else {
        std::tie(nf, perm) = traceNormalFormWithPerm(g, raw);
      }
      std::vector<int> comps(raw.size());
      for (size_t k = 0; k < raw.size(); ++k) comps[k] = rawComps[perm[k]];
      out.add(indexOf({nf, comps}), i, a.annihilate[c0]);
    }
  }
  return out;
}

template <class S>
SparseOperator<S> FockSpace<S>::startProjection(int v) const {
  SparseOperator<S> out(size(), size());
  for (int i = 0; i < size(); ++i) {
    const FockItem& it = items_[i];
    const bool starts = freeMode() ? (!it.word.empty() && it.word.front() == v)
                                   : wordStartsWith(*graph_, it.word, v);
    if (starts) out.add(i, i, ScalarOps<S>::one());
  }
  return out;
}

template <class S>
Letters FockSpace<S>::cliqueWord(VertexSet gamma0) const {
  if (!graph_->isClique(gamma0))
    throw std::invalid_argument("fock: vertex set is not a clique");
  std::vector<int> vs = setElements(gamma0);
  return Letters(vs.begin(), vs.end());
}

template <class S>
SparseOperator<S> FockSpace<S>::cliquePrefixProjection(VertexSet gamma0) const {
  if (!freeMode())
    throw std::invalid_argument("cliquePrefixProjection: free-product space required");
  Letters prefix = cliqueWord(gamma0);
  SparseOperator<S> out(size(), size());
  for (int i = 0; i < size(); ++i) {
    const Letters& w = items_[i].word;
    if (w.size() < prefix.size()) continue;
    if (std::equal(prefix.begin(), prefix.end(), w.begin())) out.add(i, i, ScalarOps<S>::one());
  }
  return out;
}

template <class S>
SparseOperator<S> FockSpace<S>::diagOperator(VertexSet gamma0,
                                             const std::vector<VertexElement<S>>& elems) const {
  if (!freeMode()) throw std::invalid_argument("diagOperator: free-product space required");
  Letters prefix = cliqueWord(gamma0);
  const int l = (int)prefix.size();
  if ((int)elems.size() != l)
    throw std::invalid_argument("diagOperator: one element per clique letter required");
  SparseOperator<S> out(size(), size());
  for (int i = 0; i < size(); ++i) {
    const FockItem& it = items_[i];
    if ((int)it.word.size() < l) continue;
    if (!std::equal(prefix.begin(), prefix.end(), it.word.begin())) continue;
    // Tensor factor action P a P on the first l slots, identity beyond.
    std::vector<int> target(l, 0);
    for (;;) {
      S value = ScalarOps<S>::one();
      for (int slot = 0; slot < l; ++slot) value *= elems[slot].compress[target[slot]][it.comps[slot]];
      if (!ScalarOps<S>::prune(value)) {
        FockItem dst = it;
        for (int slot = 0; slot < l; ++slot) dst.comps[slot] = target[slot];
        out.add(indexOf(dst), i, value);
      }
      int slot = l - 1;
      while (slot >= 0 && target[slot] + 1 >= (int)elems[slot].compress.size()) target[slot--] = 0;
      if (slot < 0) break;
      target[slot]++;
    }
  }
  return out;
}

}  // namespace hecklab
