#include "hecklab/khintchine.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hecklab/numeric.hpp"

namespace hecklab {

std::vector<SummandIndex> summandIndices(const SimplicialGraph& g, int d) {
  std::vector<SummandIndex> out;
  for (int l = 0; l <= d; ++l) {
    for (VertexSet gamma0 : g.cliquesOfSize(l)) {
      for (auto [gamma1, gamma2] : g.comm(gamma0)) {
        for (int k = 0; k <= d - l; ++k) out.push_back({l, k, gamma0, gamma1, gamma2});
      }
    }
  }
  return out;
}

namespace {

// Shared segment tests for the three permutation searches.
struct Segments {
  Letters prefix, middle, tail;
};

Segments segmentsOf(const Letters& u, int k, int l) {
  return {Letters(u.begin(), u.begin() + k), Letters(u.begin() + k, u.begin() + k + l),
          Letters(u.begin() + k + l, u.end())};
}

bool middleIsClique(const Letters& middle, VertexSet gamma0) {
  VertexSet seen = 0;
  for (int s : middle) {
    if (setContains(seen, s)) return false;
    seen = setAdd(seen, s);
  }
  return seen == gamma0;
}

bool prefixEndConditions(const SimplicialGraph& g, const Letters& prefix, VertexSet gamma0,
                         VertexSet gamma1) {
  for (int s : setElements(gamma1))
    if (!wordEndsWith(g, prefix, s)) return false;
  for (int s : setElements(g.link(gamma0) & ~gamma1))
    if (wordEndsWith(g, prefix, s)) return false;
  return true;
}

bool tailStartConditions(const SimplicialGraph& g, const Letters& tail, VertexSet gamma0,
                         VertexSet gamma2) {
  for (int s : setElements(gamma2))
    if (!wordStartsWith(g, tail, s)) return false;
  for (int s : setElements(g.link(gamma0) & ~gamma2))
    if (wordStartsWith(g, tail, s)) return false;
  return true;
}

bool isRepresentative(const SimplicialGraph& g, const Letters& w) {
  return traceNormalForm(g, w) == w;
}

template <class Predicate>
std::optional<std::vector<int>> uniqueMatch(const std::vector<std::vector<int>>& perms,
                                            Predicate&& accepts, const char* what) {
  std::optional<std::vector<int>> found;
  for (const auto& perm : perms) {
    if (!accepts(perm)) continue;
    if (found && *found != perm)
      throw std::logic_error(std::string(what) + ": permutation not unique");
    found = perm;
  }
  return found;
}

}  // namespace

std::optional<std::vector<int>> splitPermutation(const SimplicialGraph& g, const Letters& v,
                                                 const SummandIndex& idx,
                                                 const std::vector<std::vector<int>>& perms) {
  const int d = (int)v.size();
  if (idx.k + idx.l > d) return std::nullopt;
  return uniqueMatch(
      perms,
      [&](const std::vector<int>& perm) {
        Letters u = applyPermutation(v, perm);
        auto seg = segmentsOf(u, idx.k, idx.l);
        return middleIsClique(seg.middle, idx.gamma0) &&
               prefixEndConditions(g, seg.prefix, idx.gamma0, idx.gamma1) &&
               tailStartConditions(g, seg.tail, idx.gamma0, idx.gamma2) &&
               isRepresentative(g, seg.prefix) && isRepresentative(g, seg.middle) &&
               isRepresentative(g, seg.tail);
      },
      "splitPermutation");
}

std::optional<std::vector<int>> splitPermutation(const SimplicialGraph& g, const Letters& v,
                                                 const SummandIndex& idx) {
  return splitPermutation(g, v, idx, shufflePermutations(g, v));
}

std::optional<std::vector<int>> domainShufflePermutation(
    const SimplicialGraph& g, const Letters& w, const SummandIndex& idx,
    const std::vector<std::vector<int>>& perms) {
  const int n = (int)w.size();
  if (idx.k + idx.l > n) return std::nullopt;
  return uniqueMatch(
      perms,
      [&](const std::vector<int>& perm) {
        Letters u = applyPermutation(w, perm);
        auto seg = segmentsOf(u, idx.k, idx.l);
        if (!middleIsClique(seg.middle, idx.gamma0)) return false;
        if (!prefixEndConditions(g, seg.prefix, idx.gamma0, idx.gamma1)) return false;
        for (int s : setElements(idx.gamma2))
          if (wordStartsWith(g, seg.tail, s)) return false;
        Letters reversed(seg.prefix.rbegin(), seg.prefix.rend());
        return isRepresentative(g, reversed) && isRepresentative(g, seg.middle) &&
               isRepresentative(g, seg.tail);
      },
      "domainShufflePermutation");
}

std::optional<std::vector<int>> rangeShufflePermutation(
    const SimplicialGraph& g, const Letters& w, const SummandIndex& idx,
    const std::vector<std::vector<int>>& perms) {
  const int n = (int)w.size();
  if (idx.k + idx.l > n) return std::nullopt;
  return uniqueMatch(
      perms,
      [&](const std::vector<int>& perm) {
        Letters u = applyPermutation(w, perm);
        auto seg = segmentsOf(u, idx.k, idx.l);
        return middleIsClique(seg.middle, idx.gamma0) &&
               prefixEndConditions(g, seg.prefix, idx.gamma0, idx.gamma1) &&
               isRepresentative(g, seg.prefix) && isRepresentative(g, seg.middle) &&
               isRepresentative(g, seg.tail);
      },
      "rangeShufflePermutation");
}

double blockDenseSpectralNorm(const std::vector<std::vector<std::complex<double>>>& m) {
  return denseSpectralNorm(m);
}

template <class S>
KhintchineContext<S>::KhintchineContext(const CoxeterSystem& sys, const MultiParameter& q,
                                        int maxLength, std::size_t capItems)
    : sys_(&sys),
      q_(q),
      n_(maxLength),
      graphSide_(FockSpace<S>::Kind::GraphProduct, sys.commutationGraph(),
                 std::vector<int>(sys.rank(), 1), maxLength, capItems),
      freeSide_(FockSpace<S>::Kind::FreeProduct, sys.commutationGraph(),
                std::vector<int>(sys.rank(), 1), maxLength, capItems) {
  if (!sys.rightAngled())
    throw std::invalid_argument("khintchine: right-angled system required");
  for (int s = 0; s < sys.rank(); ++s) {
    vertexT_.push_back(heckeVertexElement<S>(psScalar<S>(q_, s)));
    graphSlots_.push_back(buildSlotOperators(graphSide_, s, vertexT_[s]));
    freeSlots_.push_back(buildSlotOperators(freeSide_, s, vertexT_[s]));
  }
}

template <class S>
const std::vector<std::vector<int>>& KhintchineContext<S>::shuffleClass(const Letters& w) const {
  auto it = shuffleCache_.find(w);
  if (it == shuffleCache_.end())
    it = shuffleCache_.emplace(w, shufflePermutations(graph(), w)).first;
  return it->second;
}

template <class S>
std::optional<std::vector<int>> KhintchineContext<S>::sigma(const Letters& v,
                                                            const SummandIndex& idx) const {
  return splitPermutation(graph(), v, idx, shuffleClass(v));
}

template <class S>
std::vector<const SlotOperators<S>*> KhintchineContext<S>::slotPointers(const Letters& v,
                                                                        bool freeSideSlots) const {
  std::vector<const SlotOperators<S>*> out;
  out.reserve(v.size());
  for (int s : v) out.push_back(freeSideSlots ? &freeSlots_[s] : &graphSlots_[s]);
  return out;
}

template <class S>
std::vector<const VertexElement<S>*> KhintchineContext<S>::elementPointers(const Letters& v) const {
  std::vector<const VertexElement<S>*> out;
  out.reserve(v.size());
  for (int s : v) out.push_back(&vertexT_[s]);
  return out;
}

template <class S>
SparseOperator<S> KhintchineContext<S>::reducedProduct(const Letters& v) const {
  SparseOperator<S> out = SparseOperator<S>::identity(graphSide_.size());
  for (int s : v) {
    const SlotOperators<S>& slot = graphSlots_[s];
    // T_s itself: the three sandwiches sum to it since P-perp T_s P-perp = 0.
    out = out * (slot.create + slot.diagonal + slot.annihilate);
  }
  return out;
}

template <class S>
SparseOperator<S> KhintchineContext<S>::summand(const Letters& v, const SummandIndex& idx) const {
  return summandOperator(graphSide_, idx, sigma(v, idx), slotPointers(v, false));
}

template <class S>
double KhintchineContext<S>::windowResidual(const SparseOperator<S>& a, const SparseOperator<S>& b,
                                            int degree) const {
  return maxDifferenceOnWindow(a, b, graphSide_.lengths(), graphSide_.lengths(), n_ - degree);
}

template <class S>
double KhintchineContext<S>::decompositionResidual(const Letters& v) const {
  const int d = (int)v.size();
  SparseOperator<S> sum(graphSide_.size(), graphSide_.size());
  auto slots = slotPointers(v, false);
  for (const SummandIndex& idx : summandIndices(graph(), d)) {
    auto perm = sigma(v, idx);
    if (!perm) continue;
    sum = sum + summandOperator(graphSide_, idx, perm, slots);
  }
  return windowResidual(sum, reducedProduct(v), d);
}

template <class S>
const SparseOperator<S>& KhintchineContext<S>::domainIsometry(const SummandIndex& idx) const {
  auto it = qCache_.find(idx);
  if (it != qCache_.end()) return it->second;
  SparseOperator<S> q(freeSide_.size(), graphSide_.size());
  for (int i = 0; i < graphSide_.size(); ++i) {
    const FockItem& item = graphSide_.item(i);
    auto perm = domainShufflePermutation(graph(), item.word, idx, shuffleClass(item.word));
    if (!perm) continue;
    FockItem target{applyPermutation(item.word, *perm), applyPermutation(item.comps, *perm)};
    q.add(freeSide_.indexOf(target), i, ScalarOps<S>::one());
  }
  return qCache_.emplace(idx, std::move(q)).first->second;
}

template <class S>
const SparseOperator<S>& KhintchineContext<S>::rangeIsometry(const SummandIndex& idx) const {
  auto it = rCache_.find(idx);
  if (it != rCache_.end()) return it->second;
  SparseOperator<S> r(freeSide_.size(), graphSide_.size());
  for (int i = 0; i < graphSide_.size(); ++i) {
    const FockItem& item = graphSide_.item(i);
    auto perm = rangeShufflePermutation(graph(), item.word, idx, shuffleClass(item.word));
    if (!perm) continue;
    FockItem target{applyPermutation(item.word, *perm), applyPermutation(item.comps, *perm)};
    r.add(freeSide_.indexOf(target), i, ScalarOps<S>::one());
  }
  return rCache_.emplace(idx, std::move(r)).first->second;
}

template <class S>
SparseOperator<S> KhintchineContext<S>::freeBlock(const Letters& v, const SummandIndex& idx) const {
  return freeBlockOperator(freeSide_, idx, sigma(v, idx), slotPointers(v, true),
                           elementPointers(v));
}

template <class S>
double KhintchineContext<S>::intertwinerResidual(const Letters& v, const SummandIndex& idx) const {
  const int d = (int)v.size();
  auto perm = sigma(v, idx);
  SparseOperator<S> rhs = summandOperator(graphSide_, idx, perm, slotPointers(v, false));
  if (!perm) {
    // Both sides vanish by definition; the residual is the graph summand.
    return windowResidual(rhs, SparseOperator<S>(graphSide_.size(), graphSide_.size()), d);
  }
  SparseOperator<S> lhs = rangeIsometry(idx).adjoint() * freeBlock(v, idx) *
                          domainIsometry(swappedIndex(d, idx));
  return windowResidual(lhs, rhs, d);
}

template <class S>
double KhintchineContext<S>::reconstructionResidual(const Letters& v) const {
  const int d = (int)v.size();
  SparseOperator<S> sum(graphSide_.size(), graphSide_.size());
  for (const SummandIndex& idx : summandIndices(graph(), d)) {
    auto perm = sigma(v, idx);
    if (!perm) continue;
    sum = sum + rangeIsometry(idx).adjoint() *
                    freeBlockOperator(freeSide_, idx, perm, slotPointers(v, true),
                                      elementPointers(v)) *
                    domainIsometry(swappedIndex(d, idx));
  }
  return windowResidual(sum, reducedProduct(v), d);
}

template <class S>
std::vector<Letters> KhintchineContext<S>::representativeWords(int length) const {
  std::vector<Letters> out;
  for (int i = 0; i < graphSide_.size(); ++i) {
    const FockItem& item = graphSide_.item(i);
    if ((int)item.word.size() > length) break;
    if ((int)item.word.size() == length &&
        (out.empty() || out.back() != item.word))
      out.push_back(item.word);
  }
  return out;
}

template <class S>
std::vector<Letters> KhintchineContext<S>::creationWords(int k, VertexSet gamma0,
                                                         VertexSet gamma1) const {
  std::vector<Letters> out;
  for (const Letters& w : representativeWords(k))
    if (prefixEndConditions(graph(), w, gamma0, gamma1)) out.push_back(w);
  return out;
}

template <class S>
std::vector<Letters> KhintchineContext<S>::annihilationWords(int m, VertexSet gamma0,
                                                             VertexSet gamma2) const {
  std::vector<Letters> out;
  for (const Letters& w : representativeWords(m))
    if (tailStartConditions(graph(), w, gamma0, gamma2)) out.push_back(w);
  return out;
}

template <class S>
BlockDecomposition<S> KhintchineContext<S>::blockDecompose(const HeckeElement<S>& x,
                                                           int degree) const {
  for (const auto& [w, c] : x.coeff)
    if (w.length() != degree)
      throw std::invalid_argument("blockDecompose: element not homogeneous of the given degree");
  BlockDecomposition<S> out;
  out.degree = degree;
  for (const SummandIndex& idx : summandIndices(graph(), degree)) {
    typename BlockDecomposition<S>::Block blk;
    blk.idx = idx;
    blk.rowWords = creationWords(idx.k, idx.gamma0, idx.gamma1);
    blk.colWords = annihilationWords(degree - idx.k - idx.l, idx.gamma0, idx.gamma2);
    blk.m.assign(blk.rowWords.size(), std::vector<S>(blk.colWords.size(), ScalarOps<S>::zero()));
    for (const auto& [w, c] : x.coeff) {
      auto perm = sigma(w.nf, idx);
      if (!perm) continue;
      Letters u = applyPermutation(w.nf, *perm);
      auto seg = segmentsOf(u, idx.k, idx.l);
      auto row = std::find(blk.rowWords.begin(), blk.rowWords.end(), seg.prefix);
      auto col = std::find(blk.colWords.begin(), blk.colWords.end(), seg.tail);
      if (row == blk.rowWords.end() || col == blk.colWords.end())
        throw std::logic_error("blockDecompose: segment missing from block coordinates");
      S factor = c;
      for (int s : setElements(idx.gamma0)) factor *= psScalar<S>(q_, s);
      blk.m[row - blk.rowWords.begin()][col - blk.colWords.begin()] += factor;
    }
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

template class KhintchineContext<RationalComplex>;
template class KhintchineContext<std::complex<double>>;

HaagerupReport haagerupExperiment(const CoxeterSystem& sys, const MultiParameter& q, int degree,
                                  int samples, int radius, std::uint64_t seed, int jobs) {
  if (!sys.rightAngled())
    throw std::invalid_argument("haagerup experiment: right-angled system required");
  if (degree > radius) throw std::invalid_argument("haagerup experiment: degree exceeds radius");
  BallBasis basis(sys, radius);
  std::vector<GroupElement> words;
  for (int i = 0; i < basis.size(); ++i)
    if (basis.element(i).length() == degree) words.push_back(basis.element(i));

  HaagerupReport report;
  report.degree = degree;
  report.radius = radius;
  report.samples = samples;
  const double cliqueCount = (double)sys.commutationGraph().cliques().size();
  double prodP = 1;
  bool degenerate = false;
  for (int s = 0; s < sys.rank(); ++s) {
    double p = std::abs(q.ps(s));
    prodP *= p;
    if (p == 0) degenerate = true;
  }
  report.paperConstant = degree * cliqueCount * cliqueCount * cliqueCount * prodP;
  report.degenerateConstant = degenerate;
  report.ratios.assign(samples, 0.0);

  auto runSample = [&](int idx) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)(idx + 1)));
    HeckeElement<std::complex<double>> x(sys, q);
    for (const GroupElement& w : words) x.addTerm(w, rng.nextComplexGaussian());
    double l2 = l2Norm(x);
    if (l2 == 0) {
      report.ratios[idx] = 0;
      return;
    }
    auto matrix = representElement(x, basis);
    report.ratios[idx] = normLowerBound(matrix).value / l2;
  };

  if (jobs <= 1) {
    for (int i = 0; i < samples; ++i) runSample(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < samples; i = next.fetch_add(1)) runSample(i);
      });
    for (auto& th : pool) th.join();
  }

  for (int i = 0; i < samples; ++i) {
    report.empiricalMax = std::max(report.empiricalMax, report.ratios[i]);
    if (report.ratios[i] > report.paperConstant) report.flaggedSamples.push_back(i);
  }
  return report;
}

}  // namespace hecklab
