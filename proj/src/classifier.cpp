#include "hecklab/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hecklab/numeric.hpp"
#include "hecklab/sparse.hpp"

namespace hecklab {

const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::SimpleUniqueTrace: return "simple+uniqueTrace";
    case Verdict::NotSimple: return "notSimple";
    default: return "unknown";
  }
}

const char* verdictFamilyName(VerdictFamily f) {
  switch (f) {
    case VerdictFamily::FreeAbelianProduct: return "freeAbelianProduct";
    case VerdictFamily::SphericalOrAffine: return "sphericalOrAffine";
    case VerdictFamily::GeneralRightAngled: return "generalRightAngled";
    default: return "general";
  }
}

std::vector<double> epsilonNormalize(const CoxeterSystem& sys, const std::vector<double>& q) {
  if ((int)q.size() != sys.rank())
    throw std::invalid_argument("epsilonNormalize: one value per generator required");
  for (const auto& cls : sys.generatorConjugacyClasses()) {
    for (size_t i = 1; i < cls.size(); ++i)
      if (q[cls[i]] != q[cls[0]])
        throw std::invalid_argument(
            "epsilonNormalize: parameter not constant on a conjugacy class; "
            "criterion inapplicable");
  }
  std::vector<double> out = q;
  for (double& v : out)
    if (v > 1.0) v = 1.0 / v;
  return out;
}

SimplicityVerdict classifyFreeAbelianProduct(const std::vector<int>& ks,
                                             const std::vector<double>& q) {
  SimplicityVerdict verdict;
  verdict.family = VerdictFamily::FreeAbelianProduct;
  const int l = (int)ks.size();
  if (l < 2) {
    verdict.note = "hypothesis failed: need at least two free factors";
    return verdict;
  }
  int total = 0;
  for (int k : ks) {
    if (k < 1) {
      verdict.note = "hypothesis failed: factor ranks must be >= 1";
      return verdict;
    }
    total += k;
  }
  if ((int)q.size() != total)
    throw std::invalid_argument("classifyFreeAbelianProduct: one parameter value per generator");
  for (double v : q)
    if (!(v > 0)) throw std::invalid_argument("classifyFreeAbelianProduct: q must be positive");

  std::vector<double> qhat = q;
  for (double& v : qhat)
    if (v > 1.0) v = 1.0 / v;

  double sum = 0;
  int offset = 0;
  for (int k : ks) {
    double prod = 1;
    for (int i = 0; i < k; ++i) prod /= 1.0 + qhat[offset + i];
    sum += prod;
    offset += k;
  }
  verdict.regionValue = sum;
  verdict.threshold = (double)(l - 1);
  // Closure membership: non-strict, with a small tolerance so exact boundary
  // parameters land inside.
  if (sum >= verdict.threshold - 1e-9) {
    verdict.verdict = Verdict::NotSimple;
    verdict.certificateQ = qhat;
    verdict.note = "normalized parameter lies in the closed flipped convergence region; "
                   "the character T_w -> qhat_w^{1/2} is bounded";
  } else {
    verdict.verdict = Verdict::SimpleUniqueTrace;
    verdict.note = "normalized parameter lies outside the closed flipped convergence region";
  }
  return verdict;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> freeAbelianProductShape(
    const CoxeterSystem& sys) {
  if (!sys.rightAngled()) return std::nullopt;
  const SimplicialGraph& g = sys.commutationGraph();
  const int n = g.vertexCount();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int t = 0; t < n; ++t)
        if (comp[t] < 0 && g.adjacent(v, t)) {
          comp[t] = count;
          stack.push_back(t);
        }
    }
    ++count;
  }
  std::vector<std::vector<int>> groups(count);
  for (int s = 0; s < n; ++s) groups[comp[s]].push_back(s);
  for (const auto& grp : groups) {
    VertexSet mask = 0;
    for (int v : grp) mask = setAdd(mask, v);
    if (!g.isClique(mask)) return std::nullopt;
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<int> ks, order;
  for (const auto& grp : groups) {
    ks.push_back((int)grp.size());
    order.insert(order.end(), grp.begin(), grp.end());
  }
  return std::make_pair(ks, order);
}

StructureReport classifyStructure(const CoxeterSystem& sys, const std::vector<double>& q) {
  if ((int)q.size() != sys.rank())
    throw std::invalid_argument("classifyStructure: one parameter value per generator");
  StructureReport report;
  report.components = sys.irreducibleComponents();
  report.nuclear = std::all_of(report.components.begin(), report.components.end(),
                               [](const auto& c) { return c.type != CoxeterType::NonAffine; });

  bool anyTame = std::any_of(report.components.begin(), report.components.end(),
                             [](const auto& c) { return c.type != CoxeterType::NonAffine; });
  if (anyTame) {
    report.simplicity.verdict = Verdict::NotSimple;
    report.simplicity.family = VerdictFamily::SphericalOrAffine;
    report.simplicity.certificateQ = epsilonNormalize(sys, q);
    report.simplicity.note =
        "a spherical or affine component carries a character for every parameter";
    return report;
  }
  if (auto shape = freeAbelianProductShape(sys); shape && (int)shape->first.size() >= 2) {
    std::vector<double> permuted;
    permuted.reserve(q.size());
    for (int s : shape->second) permuted.push_back(q[s]);
    report.simplicity = classifyFreeAbelianProduct(shape->first, permuted);
    return report;
  }
  bool qIsOne = std::all_of(q.begin(), q.end(), [](double v) { return v == 1.0; });
  if (qIsOne) {
    report.simplicity.verdict = Verdict::SimpleUniqueTrace;
    report.simplicity.family = VerdictFamily::General;
    report.simplicity.note =
        "q = 1 and every component is non-affine: the reduced group C*-algebra "
        "is simple with unique trace";
    return report;
  }
  report.simplicity.verdict = Verdict::Unknown;
  report.simplicity.family =
      sys.rightAngled() ? VerdictFamily::GeneralRightAngled : VerdictFamily::General;
  report.simplicity.note =
      "undecided: for irreducible right-angled systems with >= 3 generators there is an "
      "open neighborhood of q = 1 on which the algebra is simple with unique trace, but "
      "no computable radius is available";
  return report;
}

double characterCertificateResidual(const CoxeterSystem& sys, const MultiParameter& q,
                                    int ballRadius, int pairs, std::uint64_t seed) {
  std::vector<GroupElement> ball = sys.ball(ballRadius);
  Rng rng(seed);
  auto randomElement = [&] {
    HeckeElement<std::complex<double>> x(sys, q);
    for (const GroupElement& w : ball) x.addTerm(w, rng.nextComplexGaussian());
    return x;
  };
  double residual = 0;
  for (int i = 0; i < pairs; ++i) {
    auto x = randomElement();
    auto y = randomElement();
    auto lhs = characterApply(multiply(x, y));
    auto rhs = characterApply(x) * characterApply(y);
    residual = std::max(residual, std::abs(lhs - rhs));
  }
  return residual;
}

namespace {

// Shortest (then lex) walk in the non-commuting graph starting next to s and
// covering all other generators; repeated vertices allowed.
std::optional<std::vector<int>> coveringChain(const CoxeterSystem& sys, int s) {
  const int n = sys.rank();
  auto infinite = [&](int a, int b) { return a != b && sys.exponent(a, b) == kInfinity; };
  VertexSet goal = 0;
  for (int t = 0; t < n; ++t)
    if (t != s) goal = setAdd(goal, t);

  struct State {
    std::vector<int> path;
    VertexSet covered;
  };
  std::vector<State> layer;
  std::set<std::pair<int, VertexSet>> seen;
  for (int t0 = 0; t0 < n; ++t0) {
    if (t0 == s || !infinite(s, t0)) continue;
    layer.push_back({{t0}, setAdd(0, t0)});
    seen.insert({t0, setAdd(0, t0)});
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> complete;
    for (const State& st : layer)
      if (st.covered == goal && st.path.size() >= 2) complete.push_back(st.path);
    if (!complete.empty()) return *std::min_element(complete.begin(), complete.end());
    std::vector<State> next;
    for (const State& st : layer) {
      for (int t = 0; t < n; ++t) {
        if (t == s || !infinite(st.path.back(), t)) continue;
        VertexSet covered = setAdd(st.covered, t);
        if (!seen.insert({t, covered}).second) continue;
        State ns{st.path, covered};
        ns.path.push_back(t);
        next.push_back(std::move(ns));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

PowersElements findPowersElements(const CoxeterSystem& sys, std::size_t ballCap) {
  if (!sys.rightAngled())
    throw std::invalid_argument("powers elements: right-angled system required");
  if (sys.rank() < 3)
    throw std::invalid_argument("powers elements: at least 3 generators required");
  if (sys.irreducibleComponents().size() != 1)
    throw std::invalid_argument("powers elements: irreducible system required");

  std::optional<std::vector<int>> bestChain;
  int bestS = -1;
  for (int s = 0; s < sys.rank(); ++s) {
    auto chain = coveringChain(sys, s);
    if (!chain) continue;
    if (!bestChain || chain->size() < bestChain->size() ||
        (chain->size() == bestChain->size() && *chain < *bestChain)) {
      bestChain = chain;
      bestS = s;
    }
  }
  if (!bestChain)
    throw std::invalid_argument(
        "powers elements: no covering chain of infinite exponents exists");

  PowersElements out;
  out.chain = *bestChain;
  out.t0 = out.chain.front();
  Letters w1(out.chain.begin(), out.chain.end());
  for (int i = (int)out.chain.size() - 2; i >= 0; --i) w1.push_back(out.chain[i]);
  out.w1 = sys.reduce(w1);
  out.w2 = GroupElement{{bestS}};
  out.w3 = GroupElement{{out.chain[1]}};

  // Exhaustive check of the three set conditions on the largest enumerable
  // ball of radius at most 2|w1|+2.
  int radius = 2 * out.w1.length() + 2;
  std::vector<GroupElement> ball;
  for (; radius >= out.w1.length() + 1; --radius) {
    try {
      ball = sys.ball(radius, ballCap);
      break;
    } catch (const ResourceLimitError&) {
      continue;
    }
  }
  if (ball.empty()) throw ResourceLimitError("powers elements: validation ball not enumerable");
  out.validatedRadius = radius;
  auto inD = [&](const GroupElement& g) { return sys.startsWith(g, out.t0); };
  auto conjugate = [&](const GroupElement& u, const GroupElement& g) {
    return sys.multiply(sys.multiply(sys.inverse(u), g), u);
  };
  for (const GroupElement& g : ball) {
    if (g.isIdentity()) continue;
    bool d0 = inD(g);
    if (!d0 && !inD(conjugate(out.w1, g)))
      throw std::logic_error("powers elements: covering condition failed at " +
                             wordToString(sys, g.nf));
    bool d2 = inD(conjugate(out.w2, g));
    bool d3 = inD(conjugate(out.w3, g));
    if ((d0 && d2) || (d0 && d3) || (d2 && d3))
      throw std::logic_error("powers elements: disjointness condition failed at " +
                             wordToString(sys, g.nf));
  }
  out.validated = true;
  return out;
}

NormEstimate averagingNormEstimate(const CoxeterSystem& sys, const MultiParameter& q,
                                   const std::vector<GroupElement>& flist, int radius) {
  BallBasis basis(sys, radius);
  if (basis.size() < 2) throw std::invalid_argument("averaging estimate: ball too small");
  // Index 0 is the identity; the compression acts on the complement.
  SparseOperator<std::complex<double>> m(basis.size() - 1, basis.size() - 1);
  for (int i = 1; i < basis.size(); ++i) {
    auto image = deformedAveraging(
        heckeBasis<std::complex<double>>(sys, q, basis.element(i)), flist);
    for (const auto& [w, c] : image.coeff) {
      if (w.isIdentity()) continue;  // trace component, orthogonal to the domain
      int j = basis.indexOf(w);
      if (j > 0) m.add(j - 1, i - 1, c);
    }
  }
  return normLowerBound(m);
}

std::vector<double> powersDecaySequence(const HeckeElement<std::complex<double>>& x,
                                        const std::vector<GroupElement>& flist, int steps) {
  std::vector<double> out;
  auto traceTerm = scale(trace(x), heckeOne<std::complex<double>>(*x.sys, x.q));
  HeckeElement<std::complex<double>> cur = x;
  for (int l = 1; l <= steps; ++l) {
    cur = deformedAveraging(cur, flist);
    out.push_back(l2Norm(subtract(cur, traceTerm)));
  }
  return out;
}

ChingReport chingInequalityTest(const CoxeterSystem& sys, const std::vector<GroupElement>& gs,
                                int ballRadius, int samples, std::uint64_t seed) {
  if (gs.size() != 3) throw std::invalid_argument("ching test: exactly three elements required");
  MultiParameter qOne = MultiParameter::uniform(sys, 1.0);
  std::vector<GroupElement> ball = sys.ball(ballRadius);
  Rng rng(seed);
  ChingReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    HeckeElement<std::complex<double>> x(sys, qOne);
    for (const GroupElement& w : ball) x.addTerm(w, rng.nextComplexGaussian());
    auto centered = subtract(x, scale(trace(x), heckeOne<std::complex<double>>(sys, qOne)));
    double lhs = l2Norm(centered);
    double worst = 0;
    for (const GroupElement& g : gs) {
      auto u = heckeBasis<std::complex<double>>(sys, qOne, g);
      auto conj = multiply(multiply(adjoint(u), x), u);
      worst = std::max(worst, l2Norm(subtract(x, conj)));
    }
    double rhs = 14.0 * worst;
    if (lhs < 1e-15 && rhs < 1e-15) {
      report.skipped++;
      continue;
    }
    report.maxRatio = std::max(report.maxRatio, lhs / rhs);
  }
  return report;
}

double parallelogramResidual(const std::vector<std::vector<std::complex<double>>>& vectors) {
  if (vectors.empty()) return 0;
  const size_t dim = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != dim)
      throw std::invalid_argument("parallelogram: vectors must share a common space");
  auto norm2 = [](const std::vector<std::complex<double>>& v) {
    double out = 0;
    for (const auto& x : v) out += std::norm(x);
    return out;
  };
  std::vector<std::complex<double>> sum(dim, 0.0);
  double lhs = 0, rhs = 0;
  for (const auto& v : vectors) {
    for (size_t k = 0; k < dim; ++k) sum[k] += v[k];
    rhs += norm2(v);
  }
  rhs *= (double)vectors.size();
  lhs = norm2(sum);
  for (size_t i = 0; i < vectors.size(); ++i) {
    for (size_t j = i + 1; j < vectors.size(); ++j) {
      std::vector<std::complex<double>> diff(dim);
      for (size_t k = 0; k < dim; ++k) diff[k] = vectors[i][k] - vectors[j][k];
      lhs += norm2(diff);
    }
  }
  return std::abs(lhs - rhs);
}

}  // namespace hecklab
