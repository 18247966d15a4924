#pragma once

#include <optional>
#include <vector>

#include "hecklab/fock.hpp"
#include "hecklab/graph.hpp"
#include "hecklab/hecke.hpp"
#include "hecklab/words.hpp"

namespace hecklab {

// Index of one summand of the creation/diagonal/annihilation decomposition:
// k creation slots, a clique gamma0 of size l in the diagonal, gamma1 the
// clique the creation part ends on, gamma2 the clique the annihilation part
// starts with; (gamma1, gamma2) ranges over Comm(gamma0).
struct SummandIndex {
  int l = 0;
  int k = 0;
  VertexSet gamma0 = 0, gamma1 = 0, gamma2 = 0;

  friend bool operator<(const SummandIndex& a, const SummandIndex& b) {
    auto ta = std::tie(a.l, a.k, a.gamma0, a.gamma1, a.gamma2);
    auto tb = std::tie(b.l, b.k, b.gamma0, b.gamma1, b.gamma2);
    return ta < tb;
  }
  friend bool operator==(const SummandIndex& a, const SummandIndex& b) {
    return a.l == b.l && a.k == b.k && a.gamma0 == b.gamma0 && a.gamma1 == b.gamma1 &&
           a.gamma2 == b.gamma2;
  }
};

// All indices for ambient degree d, in deterministic order.
std::vector<SummandIndex> summandIndices(const SimplicialGraph& g, int d);

// The unique shuffle permutation splitting a reduced word into a creation
// part ending exactly on gamma1, the clique word of gamma0, and an
// annihilation part starting exactly with gamma2 (conditions (1)-(6)), all
// three segments in representative form. Returns the index map
// u[i] = v[perm[i]], or nullopt.
std::optional<std::vector<int>> splitPermutation(const SimplicialGraph& g, const Letters& v,
                                                 const SummandIndex& idx);
std::optional<std::vector<int>> splitPermutation(const SimplicialGraph& g, const Letters& v,
                                                 const SummandIndex& idx,
                                                 const std::vector<std::vector<int>>& perms);

// Rearrangement permutations behind the two graph-to-free partial
// isometries. The domain-side one (Q) satisfies conditions (1)-(4), forbids
// gamma2 letters at the start of the tail, and stores the creation segment
// reversed; the range-side one (R) satisfies (1)-(4) with all segments in
// representative order.
std::optional<std::vector<int>> domainShufflePermutation(const SimplicialGraph& g,
                                                         const Letters& w,
                                                         const SummandIndex& idx,
                                                         const std::vector<std::vector<int>>& perms);
std::optional<std::vector<int>> rangeShufflePermutation(const SimplicialGraph& g,
                                                        const Letters& w,
                                                        const SummandIndex& idx,
                                                        const std::vector<std::vector<int>>& perms);

// The three projection sandwiches of one tensor slot on a Fock space.
template <class S>
struct SlotOperators {
  SparseOperator<S> create;      // P a P-perp
  SparseOperator<S> diagonal;    // P a P
  SparseOperator<S> annihilate;  // P-perp a P
};

template <class S>
SlotOperators<S> buildSlotOperators(const FockSpace<S>& space, int vertex,
                                    const VertexElement<S>& a) {
  SparseOperator<S> op = space.vertexOperator(vertex, a);
  SparseOperator<S> p = space.startProjection(vertex);
  SparseOperator<S> pperp = SparseOperator<S>::identity(space.size()) - p;
  return {p * op * pperp, p * op * p, pperp * op * p};
}

// Product over the permuted slots: creation sandwiches first, then diagonal,
// then annihilation, exactly one factor per letter of the word.
template <class S>
SparseOperator<S> summandOperator(const FockSpace<S>& space, const SummandIndex& idx,
                                  const std::optional<std::vector<int>>& sigma,
                                  const std::vector<const SlotOperators<S>*>& slots) {
  const int d = (int)slots.size();
  if (!sigma) return SparseOperator<S>(space.size(), space.size());
  SparseOperator<S> out = SparseOperator<S>::identity(space.size());
  for (int pos = 0; pos < d; ++pos) {
    const SlotOperators<S>& slot = *slots[(*sigma)[pos]];
    const SparseOperator<S>& factor =
        pos < idx.k ? slot.create : (pos < idx.k + idx.l ? slot.diagonal : slot.annihilate);
    out = out * factor;
  }
  return out;
}

// Free-product side of one summand: creation sandwiches, the Diag operator
// of the clique, then annihilation sandwiches.
template <class S>
SparseOperator<S> freeBlockOperator(const FockSpace<S>& freeSpace, const SummandIndex& idx,
                                    const std::optional<std::vector<int>>& sigma,
                                    const std::vector<const SlotOperators<S>*>& slots,
                                    const std::vector<const VertexElement<S>*>& elements) {
  const int d = (int)slots.size();
  if (!sigma) return SparseOperator<S>(freeSpace.size(), freeSpace.size());
  SparseOperator<S> out = SparseOperator<S>::identity(freeSpace.size());
  for (int pos = 0; pos < idx.k; ++pos) out = out * slots[(*sigma)[pos]]->create;
  std::vector<VertexElement<S>> middles;
  for (int pos = idx.k; pos < idx.k + idx.l; ++pos) middles.push_back(*elements[(*sigma)[pos]]);
  out = out * freeSpace.diagOperator(idx.gamma0, middles);
  for (int pos = idx.k + idx.l; pos < d; ++pos) out = out * slots[(*sigma)[pos]]->annihilate;
  return out;
}

// Hecke-case block space X_d: one scalar matrix per summand index, rows
// indexed by admissible creation words, columns by admissible annihilation
// words; carries the trace inner product.
template <class S>
struct BlockDecomposition {
  struct Block {
    SummandIndex idx;
    std::vector<Letters> rowWords, colWords;
    std::vector<std::vector<S>> m;  // rowWords.size() x colWords.size()
  };
  int degree = 0;
  std::vector<Block> blocks;
};

template <class S>
S blockInner(const BlockDecomposition<S>& a, const BlockDecomposition<S>& b) {
  if (a.degree != b.degree || a.blocks.size() != b.blocks.size())
    throw std::invalid_argument("blockInner: degree mismatch");
  S out = ScalarOps<S>::zero();
  for (size_t bi = 0; bi < a.blocks.size(); ++bi) {
    const auto& x = a.blocks[bi];
    const auto& y = b.blocks[bi];
    if (!(x.idx == y.idx)) throw std::invalid_argument("blockInner: block layout mismatch");
    for (size_t r = 0; r < x.m.size(); ++r)
      for (size_t c = 0; c < x.m[r].size(); ++c)
        out += x.m[r][c] * ScalarOps<S>::conj(y.m[r][c]);
  }
  return out;
}

template <class S>
double blockFrobeniusNorm(const BlockDecomposition<S>& a) {
  double out = 0;
  for (const auto& blk : a.blocks)
    for (const auto& row : blk.m)
      for (const auto& v : row) out += ScalarOps<S>::abs2(v);
  return std::sqrt(out);
}

double blockDenseSpectralNorm(const std::vector<std::vector<std::complex<double>>>& m);

// Operator norm of X_d: the maximum spectral norm over the blocks.
template <class S>
double blockOperatorNorm(const BlockDecomposition<S>& a) {
  double out = 0;
  for (const auto& blk : a.blocks) {
    if (blk.m.empty()) continue;
    std::vector<std::vector<std::complex<double>>> dense(blk.m.size());
    for (size_t r = 0; r < blk.m.size(); ++r) {
      dense[r].resize(blk.m[r].size());
      for (size_t c = 0; c < blk.m[r].size(); ++c)
        dense[r][c] = ScalarOps<S>::toComplex(blk.m[r][c]);
    }
    out = std::max(out, blockDenseSpectralNorm(dense));
  }
  return out;
}

// Everything needed to run the decomposition machinery of a right-angled
// Hecke algebra at a fixed truncation length: the two Fock spaces, the
// per-vertex slot sandwiches on both, and caches for shuffle classes and
// the two isometries.
template <class S>
class KhintchineContext {
 public:
  KhintchineContext(const CoxeterSystem& sys, const MultiParameter& q, int maxLength,
                    std::size_t capItems = 4000000);

  const CoxeterSystem& system() const { return *sys_; }
  const SimplicialGraph& graph() const { return sys_->commutationGraph(); }
  const MultiParameter& parameter() const { return q_; }
  int maxLength() const { return n_; }
  const FockSpace<S>& graphSide() const { return graphSide_; }
  const FockSpace<S>& freeSide() const { return freeSide_; }

  const std::vector<std::vector<int>>& shuffleClass(const Letters& w) const;
  std::optional<std::vector<int>> sigma(const Letters& v, const SummandIndex& idx) const;

  // Product T_{v_1} ... T_{v_d} on the graph side.
  SparseOperator<S> reducedProduct(const Letters& v) const;
  SparseOperator<S> summand(const Letters& v, const SummandIndex& idx) const;

  // max |sum of summands - reduced product| on the exact window.
  double decompositionResidual(const Letters& v) const;

  // Partial isometries graph -> free for one index (Q resp. R).
  const SparseOperator<S>& domainIsometry(const SummandIndex& idx) const;
  const SparseOperator<S>& rangeIsometry(const SummandIndex& idx) const;

  // Free side of the summand: pi^f applied to the corresponding block.
  SparseOperator<S> freeBlock(const Letters& v, const SummandIndex& idx) const;

  // R* pi^f(block) Q with the swapped-index Q, against the graph summand.
  double intertwinerResidual(const Letters& v, const SummandIndex& idx) const;
  // Sum over all indices against the reduced product.
  double reconstructionResidual(const Letters& v) const;

  BlockDecomposition<S> blockDecompose(const HeckeElement<S>& x, int degree) const;

  SummandIndex swappedIndex(int d, const SummandIndex& idx) const {
    return {idx.l, d - idx.l - idx.k, idx.gamma0, idx.gamma2, idx.gamma1};
  }

  std::vector<Letters> representativeWords(int length) const;
  std::vector<Letters> creationWords(int k, VertexSet gamma0, VertexSet gamma1) const;
  std::vector<Letters> annihilationWords(int m, VertexSet gamma0, VertexSet gamma2) const;

 private:
  const CoxeterSystem* sys_;
  MultiParameter q_;
  int n_;
  FockSpace<S> graphSide_, freeSide_;
  std::vector<VertexElement<S>> vertexT_;
  std::vector<SlotOperators<S>> graphSlots_, freeSlots_;
  mutable std::map<Letters, std::vector<std::vector<int>>> shuffleCache_;
  mutable std::map<SummandIndex, SparseOperator<S>> qCache_, rCache_;

  std::vector<const SlotOperators<S>*> slotPointers(const Letters& v, bool freeSideSlots) const;
  std::vector<const VertexElement<S>*> elementPointers(const Letters& v) const;
  double windowResidual(const SparseOperator<S>& a, const SparseOperator<S>& b, int degree) const;
};

// Ratio experiment against the Haagerup bound d (#Cliq)^3 prod_s |p_s(q)|:
// random Gaussian coefficients on the degree-d words, compression norm over
// l2 norm, flagged when the ratio exceeds the constant.
struct HaagerupReport {
  int degree = 0;
  int radius = 0;
  int samples = 0;
  double paperConstant = 0;
  bool degenerateConstant = false;  // some p_s(q) = 0, bound carries no information
  double empiricalMax = 0;
  std::vector<double> ratios;
  std::vector<int> flaggedSamples;
};

HaagerupReport haagerupExperiment(const CoxeterSystem& sys, const MultiParameter& q, int degree,
                                  int samples, int radius, std::uint64_t seed, int jobs = 1);

}  // namespace hecklab
