#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecklab/coxeter.hpp"
#include "hecklab/rational.hpp"

namespace hecklab {

// Deformation multi-parameter q: one positive real per generator, constant
// on generator conjugacy classes (otherwise q_w would depend on the chosen
// reduced expression). Carries exact rational values together with exact
// square roots when available; all exact-mode algebra routes through those.
class MultiParameter {
 public:
  static MultiParameter fromDoubles(const CoxeterSystem& sys, std::vector<double> values);
  static MultiParameter fromRationals(const CoxeterSystem& sys, std::vector<Rational> values);
  static MultiParameter uniform(const CoxeterSystem& sys, double value);
  static MultiParameter uniformRational(const CoxeterSystem& sys, const Rational& value);

  int size() const { return (int)value_.size(); }
  double value(int s) const { return value_[s]; }
  double sqrtValue(int s) const { return sqrt_[s]; }
  // p_s(q) = q_s^{-1/2} (q_s - 1)
  double ps(int s) const { return (value_[s] - 1.0) / sqrt_[s]; }

  bool exact() const { return (bool)exactValue_; }
  const Rational& exactValue(int s) const { return (*exactValue_)[s]; }
  const Rational& exactSqrt(int s) const { return (*exactSqrt_)[s]; }
  Rational psExact(int s) const {
    return (exactValue(s) - Rational(1)) / exactSqrt(s);
  }

  bool isOne() const;

  friend bool operator==(const MultiParameter& a, const MultiParameter& b) {
    return a.value_ == b.value_;
  }

 private:
  std::vector<double> value_, sqrt_;
  std::optional<std::vector<Rational>> exactValue_, exactSqrt_;

  static void validateClasses(const CoxeterSystem& sys, const std::vector<double>& v);
};

template <class S>
S psScalar(const MultiParameter& q, int s) {
  if constexpr (std::is_same_v<S, RationalComplex>)
    return RationalComplex(q.psExact(s));
  else
    return S(q.ps(s), 0.0);
}

template <class S>
S sqrtQScalar(const MultiParameter& q, int s) {
  if constexpr (std::is_same_v<S, RationalComplex>)
    return RationalComplex(q.exactSqrt(s));
  else
    return S(q.sqrtValue(s), 0.0);
}

// Element of the Hecke algebra: finitely supported coefficient map on basis
// words T_w, kept free of stored zeros.
template <class S>
struct HeckeElement {
  const CoxeterSystem* sys = nullptr;
  MultiParameter q;
  std::map<GroupElement, S> coeff;

  HeckeElement() = default;
  HeckeElement(const CoxeterSystem& system, MultiParameter param)
      : sys(&system), q(std::move(param)) {}

  void addTerm(const GroupElement& w, const S& c) {
    auto it = coeff.find(w);
    if (it == coeff.end()) {
      if (!ScalarOps<S>::prune(c)) coeff.emplace(w, c);
      return;
    }
    it->second += c;
    if (ScalarOps<S>::prune(it->second)) coeff.erase(it);
  }

  S at(const GroupElement& w) const {
    auto it = coeff.find(w);
    return it == coeff.end() ? ScalarOps<S>::zero() : it->second;
  }

  int maxLength() const {
    int d = 0;
    for (const auto& [w, c] : coeff) d = std::max(d, w.length());
    return d;
  }
};

template <class S>
HeckeElement<S> heckeZero(const CoxeterSystem& sys, const MultiParameter& q) {
  return HeckeElement<S>(sys, q);
}

template <class S>
HeckeElement<S> heckeBasis(const CoxeterSystem& sys, const MultiParameter& q,
                           const GroupElement& w, const S& c = ScalarOps<S>::one()) {
  HeckeElement<S> x(sys, q);
  x.addTerm(w, c);
  return x;
}

template <class S>
HeckeElement<S> heckeOne(const CoxeterSystem& sys, const MultiParameter& q) {
  return heckeBasis<S>(sys, q, {});
}

template <class S>
HeckeElement<S> add(const HeckeElement<S>& x, const HeckeElement<S>& y) {
  HeckeElement<S> out = x;
  for (const auto& [w, c] : y.coeff) out.addTerm(w, c);
  return out;
}

template <class S>
HeckeElement<S> subtract(const HeckeElement<S>& x, const HeckeElement<S>& y) {
  HeckeElement<S> out = x;
  for (const auto& [w, c] : y.coeff) out.addTerm(w, -c);
  return out;
}

template <class S>
HeckeElement<S> scale(const S& c, const HeckeElement<S>& x) {
  HeckeElement<S> out(*x.sys, x.q);
  for (const auto& [w, v] : x.coeff) out.addTerm(w, c * v);
  return out;
}

// T_s T_w = T_{sw} when the length goes up, T_{sw} + p_s(q) T_w when it
// goes down, extended linearly.
template <class S>
HeckeElement<S> generatorTimes(int s, const HeckeElement<S>& x) {
  HeckeElement<S> out(*x.sys, x.q);
  const S p = psScalar<S>(x.q, s);
  for (const auto& [w, c] : x.coeff) {
    GroupElement sw = x.sys->leftMultiply(s, w);
    out.addTerm(sw, c);
    if (sw.length() < w.length()) out.addTerm(w, c * p);
  }
  return out;
}

// Left induction along the first basis factor: T_v y = T_{s_1} ( ... (T_{s_d} y)).
template <class S>
HeckeElement<S> multiply(const HeckeElement<S>& x, const HeckeElement<S>& y) {
  if (x.sys != y.sys || !(x.q == y.q))
    throw std::invalid_argument("hecke multiply: mixed systems or parameters");
  HeckeElement<S> out(*x.sys, x.q);
  for (const auto& [v, cv] : x.coeff) {
    HeckeElement<S> acc = scale(cv, y);
    for (auto it = v.nf.rbegin(); it != v.nf.rend(); ++it) acc = generatorTimes(*it, acc);
    for (const auto& [w, c] : acc.coeff) out.addTerm(w, c);
  }
  return out;
}

template <class S>
HeckeElement<S> adjoint(const HeckeElement<S>& x) {
  HeckeElement<S> out(*x.sys, x.q);
  for (const auto& [w, c] : x.coeff)
    out.addTerm(x.sys->inverse(w), ScalarOps<S>::conj(c));
  return out;
}

template <class S>
S trace(const HeckeElement<S>& x) {
  return x.at({});
}

// sum_w |x(w)|^2 as a scalar (exact in rational mode).
template <class S>
S l2Squared(const HeckeElement<S>& x) {
  S out = ScalarOps<S>::zero();
  for (const auto& [w, c] : x.coeff) out += c * ScalarOps<S>::conj(c);
  return out;
}

template <class S>
double l2Norm(const HeckeElement<S>& x) {
  double out = 0;
  for (const auto& [w, c] : x.coeff) out += ScalarOps<S>::abs2(c);
  return std::sqrt(out);
}

// Word length projection: keeps the coefficients on words of length d.
template <class S>
HeckeElement<S> lengthPart(const HeckeElement<S>& x, int d) {
  HeckeElement<S> out(*x.sys, x.q);
  for (const auto& [w, c] : x.coeff)
    if (w.length() == d) out.addTerm(w, c);
  return out;
}

// The *-isomorphism C_1[W] -> C_q[W] of right-angled systems,
// T_s -> (1-q_s)/(1+q_s) + 2 sqrt(q_s)/(1+q_s) T_s, extended
// multiplicatively along reduced words.
template <class S>
HeckeElement<S> deformationIsomorphism(const HeckeElement<S>& x, const MultiParameter& qTarget) {
  const CoxeterSystem& sys = *x.sys;
  if (!sys.rightAngled())
    throw std::invalid_argument(
        "deformation isomorphism: defined for right-angled systems only");
  if (!x.q.isOne())
    throw std::invalid_argument("deformation isomorphism: source must live at parameter 1");
  HeckeElement<S> out(sys, qTarget);
  for (const auto& [w, c] : x.coeff) {
    HeckeElement<S> term = heckeOne<S>(sys, qTarget);
    for (auto it = w.nf.rbegin(); it != w.nf.rend(); ++it) {
      int s = *it;
      S alpha, beta;
      if constexpr (std::is_same_v<S, RationalComplex>) {
        Rational qs = qTarget.exactValue(s);
        alpha = RationalComplex((Rational(1) - qs) / (Rational(1) + qs));
        beta = RationalComplex(Rational(2) * qTarget.exactSqrt(s) / (Rational(1) + qs));
      } else {
        double qs = qTarget.value(s);
        alpha = S((1.0 - qs) / (1.0 + qs), 0.0);
        beta = S(2.0 * qTarget.sqrtValue(s) / (1.0 + qs), 0.0);
      }
      HeckeElement<S> g = generatorTimes(s, term);
      term = add(scale(alpha, term), scale(beta, g));
    }
    for (const auto& [u, cu] : term.coeff) out.addTerm(u, c * cu);
  }
  return out;
}

// Unitary picture of C_q[W] at the flipped parameter q'_s = q_s^{eps_s},
// via T_s -> eps_s T_s^{(q')}; eps must be constant on conjugacy classes.
template <class S>
HeckeElement<S> generatorSignFlip(const HeckeElement<S>& x, const std::vector<int>& eps,
                                  const MultiParameter& qFlipped) {
  const CoxeterSystem& sys = *x.sys;
  if ((int)eps.size() != sys.rank())
    throw std::invalid_argument("sign flip: eps size mismatch");
  for (int e : eps)
    if (e != 1 && e != -1) throw std::invalid_argument("sign flip: eps entries must be +-1");
  for (const auto& cls : sys.generatorConjugacyClasses())
    for (size_t i = 1; i < cls.size(); ++i)
      if (eps[cls[i]] != eps[cls[0]])
        throw std::invalid_argument("sign flip: eps not constant on conjugacy classes");
  HeckeElement<S> out(sys, qFlipped);
  for (const auto& [w, c] : x.coeff) {
    int sign = 1;
    for (int s : w.nf) sign *= eps[s];
    out.addTerm(w, sign == 1 ? c : -c);
  }
  return out;
}

// chi_q(T_w) = q_w^{1/2}; an algebra character on C_q[W].
template <class S>
S characterValue(const MultiParameter& q, const GroupElement& w) {
  S out = ScalarOps<S>::one();
  for (int s : w.nf) out *= sqrtQScalar<S>(q, s);
  return out;
}

template <class S>
S characterApply(const HeckeElement<S>& x) {
  S out = ScalarOps<S>::zero();
  for (const auto& [w, c] : x.coeff) out += c * characterValue<S>(x.q, w);
  return out;
}

template <class S>
double maxCoefficientDifference(const HeckeElement<S>& x, const HeckeElement<S>& y) {
  double out = 0;
  for (const auto& [w, c] : x.coeff)
    out = std::max(out, std::sqrt(ScalarOps<S>::abs2(c - y.at(w))));
  for (const auto& [w, c] : y.coeff)
    out = std::max(out, std::sqrt(ScalarOps<S>::abs2(c - x.at(w))));
  return out;
}

template <class S>
bool exactlyEqual(const HeckeElement<S>& x, const HeckeElement<S>& y) {
  return x.coeff == y.coeff;
}

std::string elementWordKey(const CoxeterSystem& sys, const GroupElement& w);

// Element literals: sums of terms `T[s,t]`, `0.5*T[]`, `3/2 * T[s]`.
template <class S>
HeckeElement<S> parseElementLiteral(const CoxeterSystem& sys, const MultiParameter& q,
                                    const std::string& text);

template <class S>
std::string elementToString(const HeckeElement<S>& x) {
  if (x.coeff.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : x.coeff) {
    if (!out.empty()) out += " + ";
    out += "(" + ScalarOps<S>::str(c) + ")*T[" + elementWordKey(*x.sys, w) + "]";
  }
  return out;
}

}  // namespace hecklab
