#pragma once

#include <vector>

#include "hecklab/graph.hpp"

namespace hecklab {

// Words over the vertices of a graph, as index sequences. Two adjacent
// letters may be swapped exactly when they are distinct and joined by an
// edge (they commute); the resulting equivalence is shuffle equivalence.
using Letters = std::vector<int>;

// Cancels adjacent equal letters across commuting blocks and returns the
// canonical (lexicographically minimal) representative of the result.
Letters graphReduce(const SimplicialGraph& g, Letters w);

bool graphWordReduced(const SimplicialGraph& g, const Letters& w);

// Lexicographically minimal representative of the shuffle class. Computed
// greedily: repeatedly pick the smallest letter with no earlier
// non-commuting letter remaining.
Letters traceNormalForm(const SimplicialGraph& g, const Letters& w);

// Same, but also reports the positions picked: nf[i] == w[perm[i]].
std::pair<Letters, std::vector<int>> traceNormalFormWithPerm(const SimplicialGraph& g,
                                                             const Letters& w);

// Reduced word w starts with s iff some occurrence of s commutes with every
// letter before it; ends-with is the mirror statement.
bool wordStartsWith(const SimplicialGraph& g, const Letters& w, int s);
bool wordEndsWith(const SimplicialGraph& g, const Letters& w, int s);

// All permutations realizable by shuffles, as index maps u[i] = w[perm[i]].
// Relative order of equal letters is preserved. Exponential in the commuting
// structure; intended for short words.
std::vector<std::vector<int>> shufflePermutations(const SimplicialGraph& g, const Letters& w);

Letters applyPermutation(const Letters& w, const std::vector<int>& perm);

}  // namespace hecklab
