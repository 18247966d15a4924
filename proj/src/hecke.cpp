#include "hecklab/hecke.hpp"

#include <cmath>
#include <sstream>

namespace hecklab {

void MultiParameter::validateClasses(const CoxeterSystem& sys, const std::vector<double>& v) {
  if ((int)v.size() != sys.rank())
    throw std::invalid_argument("parameter: one value per generator required");
  for (double q : v)
    if (!(q > 0)) throw std::invalid_argument("parameter: values must be positive");
  for (const auto& cls : sys.generatorConjugacyClasses())
    for (size_t i = 1; i < cls.size(); ++i)
      if (v[cls[i]] != v[cls[0]])
        throw std::invalid_argument(
            "parameter: must be constant on generator conjugacy classes");
}

MultiParameter MultiParameter::fromDoubles(const CoxeterSystem& sys, std::vector<double> values) {
  validateClasses(sys, values);
  MultiParameter q;
  q.value_ = std::move(values);
  q.sqrt_.reserve(q.value_.size());
  for (double v : q.value_) q.sqrt_.push_back(std::sqrt(v));
  return q;
}

MultiParameter MultiParameter::fromRationals(const CoxeterSystem& sys,
                                             std::vector<Rational> values) {
  std::vector<double> dbl;
  dbl.reserve(values.size());
  for (const Rational& v : values) dbl.push_back(v.toDouble());
  validateClasses(sys, dbl);
  std::vector<Rational> roots;
  roots.reserve(values.size());
  for (const Rational& v : values) {
    auto r = v.sqrtExact();
    if (!r)
      throw std::invalid_argument("parameter: " + v.str() +
                                  " has no rational square root; use float mode");
    roots.push_back(*r);
  }
  MultiParameter q;
  q.value_ = std::move(dbl);
  q.sqrt_.reserve(roots.size());
  for (const Rational& r : roots) q.sqrt_.push_back(r.toDouble());
  q.exactValue_ = std::move(values);
  q.exactSqrt_ = std::move(roots);
  return q;
}

MultiParameter MultiParameter::uniform(const CoxeterSystem& sys, double value) {
  return fromDoubles(sys, std::vector<double>(sys.rank(), value));
}

MultiParameter MultiParameter::uniformRational(const CoxeterSystem& sys, const Rational& value) {
  return fromRationals(sys, std::vector<Rational>(sys.rank(), value));
}

bool MultiParameter::isOne() const {
  for (double v : value_)
    if (v != 1.0) return false;
  return true;
}

std::string elementWordKey(const CoxeterSystem& sys, const GroupElement& w) {
  return wordToString(sys, w.nf);
}

namespace {

struct LiteralCursor {
  const std::string& text;
  size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool done() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }
};

[[noreturn]] void literalError(const std::string& text, size_t pos, const std::string& what) {
  throw std::invalid_argument("element literal: " + what + " at offset " + std::to_string(pos) +
                              " in '" + text + "'");
}

}  // namespace

template <class S>
HeckeElement<S> parseElementLiteral(const CoxeterSystem& sys, const MultiParameter& q,
                                    const std::string& text) {
  HeckeElement<S> out(sys, q);
  LiteralCursor cur{text};
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (!first || cur.peek() == '+' || cur.peek() == '-') {
      char c = cur.peek();
      if (c != '+' && c != '-') literalError(text, cur.pos, "expected '+' or '-'");
      sign = (c == '-') ? -1 : 1;
      ++cur.pos;
    }
    first = false;
    cur.skipSpace();

    // optional coefficient before T, as 'num', 'num/den' or decimal
    S coefficient = ScalarOps<S>::one();
    if (cur.peek() != 'T') {
      size_t start = cur.pos;
      while (cur.pos < text.size() &&
             (std::isdigit((unsigned char)text[cur.pos]) || text[cur.pos] == '.' ||
              text[cur.pos] == '/' || text[cur.pos] == 'e' || text[cur.pos] == 'E' ||
              ((text[cur.pos] == '+' || text[cur.pos] == '-') &&
               (text[cur.pos - 1] == 'e' || text[cur.pos - 1] == 'E'))))
        ++cur.pos;
      std::string num = text.substr(start, cur.pos - start);
      if (num.empty()) literalError(text, cur.pos, "expected coefficient or T[...]");
      if (auto r = parseRational(num)) {
        coefficient = ScalarOps<S>::fromRational(*r);
      } else {
        if constexpr (std::is_same_v<S, RationalComplex>)
          literalError(text, start, "coefficient '" + num + "' is not rational (exact mode)");
        else
          coefficient = ScalarOps<S>::fromDouble(std::stod(num));
      }
      cur.skipSpace();
      if (cur.peek() == '*') {
        ++cur.pos;
        cur.skipSpace();
      }
    }
    if (cur.peek() != 'T') literalError(text, cur.pos, "expected T[...]");
    ++cur.pos;
    if (cur.peek() != '[') literalError(text, cur.pos, "expected '['");
    ++cur.pos;
    Letters word;
    cur.skipSpace();
    if (cur.peek() != ']') {
      for (;;) {
        cur.skipSpace();
        size_t start = cur.pos;
        while (cur.pos < text.size() && text[cur.pos] != ',' && text[cur.pos] != ']' &&
               !std::isspace((unsigned char)text[cur.pos]))
          ++cur.pos;
        std::string label = text.substr(start, cur.pos - start);
        int s = sys.indexOf(label);
        if (s < 0) literalError(text, start, "unknown generator '" + label + "'");
        word.push_back(s);
        cur.skipSpace();
        if (cur.peek() == ',') {
          ++cur.pos;
          continue;
        }
        break;
      }
    }
    if (cur.peek() != ']') literalError(text, cur.pos, "expected ']'");
    ++cur.pos;
    if (sign < 0) coefficient = -coefficient;
    out.addTerm(sys.reduce(word), coefficient);
  }
  return out;
}

template HeckeElement<RationalComplex> parseElementLiteral<RationalComplex>(
    const CoxeterSystem&, const MultiParameter&, const std::string&);
template HeckeElement<std::complex<double>> parseElementLiteral<std::complex<double>>(
    const CoxeterSystem&, const MultiParameter&, const std::string&);

}  // namespace hecklab
