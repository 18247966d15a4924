#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecklab/graph.hpp"
#include "hecklab/words.hpp"

namespace hecklab {

// Exponent value standing for m(s,t) = infinity.
inline constexpr int kInfinity = -1;

// Raised when a computation exceeds a configured cap (word length for the
// general-type reduction engine, element count for ball enumeration). This
// signals a resource limit, not a mathematical failure.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A group element is carried by its canonical reduced word: for right-angled
// systems the lexicographically minimal word of the shuffle class, in
// general the lexicographically minimal reduced expression.
struct GroupElement {
  Letters nf;

  int length() const { return (int)nf.size(); }
  bool isIdentity() const { return nf.empty(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.nf == b.nf; }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return a.nf != b.nf; }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.nf.size() != b.nf.size()) return a.nf.size() < b.nf.size();
    return a.nf < b.nf;
  }
};

enum class CoxeterType { Spherical, Affine, NonAffine };

const char* coxeterTypeName(CoxeterType t);

class CoxeterSystem {
 public:
  CoxeterSystem(std::vector<std::string> generators, std::vector<std::vector<int>> exponents,
                int generalWordCap = 16);

  // Right-angled system whose commuting pairs are the edges of the graph.
  static CoxeterSystem rightAngledFromGraph(const SimplicialGraph& g);

  int rank() const { return (int)gens_.size(); }
  const std::string& generatorLabel(int s) const { return gens_[s]; }
  const std::vector<std::string>& generatorLabels() const { return gens_; }
  int indexOf(const std::string& label) const;
  int exponent(int s, int t) const { return m_[s][t]; }
  bool rightAngled() const { return rightAngled_; }
  int generalWordCap() const { return wordCap_; }

  // Graph with an edge for each commuting pair m(s,t) = 2. For right-angled
  // systems this is the graph realizing W as a graph product of Z2's.
  const SimplicialGraph& commutationGraph() const { return commGraph_; }

  GroupElement identity() const { return {}; }
  GroupElement element(Letters reducedNormalForm) const;  // validates

  GroupElement reduce(const Letters& word) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement leftMultiply(int s, const GroupElement& g) const;
  GroupElement inverse(const GroupElement& g) const;

  // True iff |s g| < |g|  (resp. |g s| < |g|).
  bool startsWith(const GroupElement& g, int s) const;
  bool endsWith(const GroupElement& g, int s) const;

  // All elements of length <= radius, each once, sorted by (length, lex).
  std::vector<GroupElement> ball(int radius, std::size_t capElements = defaultBallCap()) const;
  static std::size_t defaultBallCap();

  // Generators s,t fall in one class iff joined by a chain of odd exponents.
  std::vector<std::vector<int>> generatorConjugacyClasses() const;

  struct Component {
    std::vector<int> generators;
    CoxeterType type;
    std::vector<double> gramEigenvalues;
  };
  // Connected components of the Coxeter diagram (edges where m >= 3 or
  // infinite), classified through the cosine matrix B(s,t) = -cos(pi/m(s,t))
  // with B(s,t) = -1 for m infinite.
  std::vector<Component> irreducibleComponents(double eigenTolerance = 1e-9) const;

 private:
  std::vector<std::string> gens_;
  std::vector<std::vector<int>> m_;
  bool rightAngled_;
  int wordCap_;
  SimplicialGraph commGraph_;

  mutable std::mutex memoMutex_;
  mutable std::map<Letters, Letters> reduceMemo_;

  Letters reduceGeneral(Letters word) const;
  std::vector<Letters> braidClass(const Letters& word) const;
};

std::string wordToString(const CoxeterSystem& sys, const Letters& w);

}  // namespace hecklab
