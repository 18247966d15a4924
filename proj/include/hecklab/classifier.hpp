#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecklab/coxeter.hpp"
#include "hecklab/fock.hpp"
#include "hecklab/growth.hpp"
#include "hecklab/hecke.hpp"

namespace hecklab {

enum class Verdict { SimpleUniqueTrace, NotSimple, Unknown };

const char* verdictName(Verdict v);

enum class VerdictFamily { FreeAbelianProduct, SphericalOrAffine, GeneralRightAngled, General };

const char* verdictFamilyName(VerdictFamily f);

struct SimplicityVerdict {
  Verdict verdict = Verdict::Unknown;
  VerdictFamily family = VerdictFamily::General;
  double regionValue = 0;  // sum_m prod_i (1 + qhat)^{-1} where applicable
  double threshold = 0;    // l - 1
  std::optional<std::vector<double>> certificateQ;  // normalized parameter carrying the character
  std::string note;
};

// q_s^{eps_s} with eps_s = +1 for q_s <= 1 and -1 otherwise; lands in (0,1]^S.
// Throws when the forced signs conflict on a conjugacy class.
std::vector<double> epsilonNormalize(const CoxeterSystem& sys, const std::vector<double>& q);

// Full classification for W = Z2^{k_1} * ... * Z2^{k_l}: not simple exactly
// when the normalized parameter satisfies sum_m prod_i (1+qhat)^{-1} >= l-1
// (closure of the flipped convergence region), simple with unique trace
// otherwise.
SimplicityVerdict classifyFreeAbelianProduct(const std::vector<int>& ks,
                                             const std::vector<double>& q);

struct StructureReport {
  std::vector<CoxeterSystem::Component> components;
  bool nuclear = false;
  bool exact = true;  // always; recorded as metadata
  SimplicityVerdict simplicity;
};

// Type/nuclearity classification plus the simplicity verdict where the
// known criteria decide it: spherical or affine components force
// non-simplicity; free products of abelian factors go through the region
// formula; q = 1 with all components non-affine is simple with unique
// trace; anything else is reported unknown.
StructureReport classifyStructure(const CoxeterSystem& sys, const std::vector<double>& q);

// Detects W = Z2^{k_1} * ... * Z2^{k_l}: the commutation graph is a
// disjoint union of cliques. Returns the ranks sorted descending along with
// the generator order matching them.
std::optional<std::pair<std::vector<int>, std::vector<int>>> freeAbelianProductShape(
    const CoxeterSystem& sys);

// chi_q multiplicativity on random ball-supported pairs; returns the
// largest |chi(xy) - chi(x)chi(y)| observed.
double characterCertificateResidual(const CoxeterSystem& sys, const MultiParameter& q,
                                    int ballRadius, int pairs, std::uint64_t seed);

// Elements w1 = t0...tn...t0, w2 = s, w3 = t1 with m(s,t0) infinite and the
// t-chain walking the non-commuting graph through all remaining generators,
// together with D = { w : |t0 w| < |w| }. The three set conditions are
// checked exhaustively on a ball.
struct PowersElements {
  GroupElement w1, w2, w3;
  int t0 = -1;
  std::vector<int> chain;
  int validatedRadius = 0;
  bool validated = false;
};

PowersElements findPowersElements(const CoxeterSystem& sys,
                                  std::size_t ballCap = CoxeterSystem::defaultBallCap());

// Averaging over F = {1, u_1, u_2, u_3} with u_i the unitaries
// pi_{q,1}(T_{w_i}); trace-preserving and unital.
template <class S>
HeckeElement<S> deformedAveraging(const HeckeElement<S>& x,
                                  const std::vector<GroupElement>& flist) {
  const CoxeterSystem& sys = *x.sys;
  MultiParameter qOne = [&] {
    if constexpr (std::is_same_v<S, RationalComplex>)
      return MultiParameter::uniformRational(sys, Rational(1));
    else
      return MultiParameter::uniform(sys, 1.0);
  }();
  S weight;
  if constexpr (std::is_same_v<S, RationalComplex>)
    weight = RationalComplex(Rational(1, (long long)(flist.size() + 1)));
  else
    weight = S(1.0 / (double)(flist.size() + 1), 0.0);
  HeckeElement<S> out = scale(weight, x);
  for (const GroupElement& w : flist) {
    HeckeElement<S> u = deformationIsomorphism(heckeBasis<S>(sys, qOne, w), x.q);
    HeckeElement<S> conjugated = multiply(multiply(adjoint(u), x), u);
    out = add(out, scale(weight, conjugated));
  }
  return out;
}

// Compression of the averaging operator to span{delta_w : 0 < |w| <= n};
// power-iteration lower bound for its norm on l2(W) minus the trace vector.
NormEstimate averagingNormEstimate(const CoxeterSystem& sys, const MultiParameter& q,
                                   const std::vector<GroupElement>& flist, int radius);

// || Phi_q^l(x) - tau(x) ||_2 for l = 1..steps, computed symbolically.
std::vector<double> powersDecaySequence(const HeckeElement<std::complex<double>>& x,
                                        const std::vector<GroupElement>& flist, int steps);

// Ching's inequality ||x - tau(x)||_2 <= 14 max_i ||x - g_i^{-1} x g_i||_2
// at q = 1 over Gaussian samples; reports the largest LHS/RHS ratio.
struct ChingReport {
  int samples = 0;
  int skipped = 0;  // samples with both sides zero
  double maxRatio = 0;
};

ChingReport chingInequalityTest(const CoxeterSystem& sys, const std::vector<GroupElement>& gs,
                                int ballRadius, int samples, std::uint64_t seed);

// | ||sum xi||^2 + sum_{i<j} ||xi_i - xi_j||^2 - (n+1) sum ||xi_i||^2 |.
double parallelogramResidual(const std::vector<std::vector<std::complex<double>>>& vectors);

}  // namespace hecklab
