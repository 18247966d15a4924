#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace hecklab {

// Exact rational scalar on 64-bit numerator/denominator. Arithmetic goes
// through 128-bit intermediates and throws std::overflow_error when a result
// does not fit; the exact-identity suites rely on there being no silent
// wraparound.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool isZero() const { return num_ == 0; }
  bool isOne() const { return num_ == 1 && den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return fromWide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return fromWide(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return fromWide((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return fromWide((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double toDouble() const { return (double)num_ / (double)den_; }

  // Exact square root, present only when both numerator and denominator are
  // perfect squares of a non-negative rational.
  std::optional<Rational> sqrtExact() const {
    if (num_ < 0) return std::nullopt;
    auto isqrt = [](long long v) -> std::optional<long long> {
      long long r = (long long)std::llround(std::sqrt((double)v));
      for (long long c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
        if (c * c == v) return c;
      return std::nullopt;
    };
    auto n = isqrt(num_);
    auto d = isqrt(den_);
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_, den_;

  static long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational overflow");
    return (long long)v;
  }
  static Rational fromWide(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a == 0) a = 1;
    Rational r;
    r.num_ = narrow(n / a);
    r.den_ = narrow(d / a);
    return r;
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
};

// Parses "a", "-a" or "a/b".
inline std::optional<Rational> parseRational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      size_t pos = 0;
      long long n = std::stoll(text, &pos);
      if (pos != text.size()) return std::nullopt;
      return Rational(n);
    }
    size_t p1 = 0, p2 = 0;
    long long n = std::stoll(text.substr(0, slash), &p1);
    long long d = std::stoll(text.substr(slash + 1), &p2);
    if (p1 != slash || p2 != text.size() - slash - 1) return std::nullopt;
    return Rational(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Complex number with exact rational real and imaginary parts.
struct RationalComplex {
  Rational re, im;

  RationalComplex() = default;
  RationalComplex(Rational r) : re(r), im(0) {}
  RationalComplex(Rational r, Rational i) : re(r), im(i) {}
  RationalComplex(long long r) : re(r), im(0) {}

  bool isZero() const { return re.isZero() && im.isZero(); }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    Rational n2 = b.re * b.re + b.im * b.im;
    if (n2.isZero()) throw std::domain_error("RationalComplex: division by zero");
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }
  RationalComplex operator-() const { return {-re, -im}; }
  RationalComplex& operator+=(const RationalComplex& o) { return *this = *this + o; }
  RationalComplex& operator-=(const RationalComplex& o) { return *this = *this - o; }
  RationalComplex& operator*=(const RationalComplex& o) { return *this = *this * o; }

  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

  std::string str() const {
    if (im.isZero()) return re.str();
    return re.str() + (im < Rational(0) ? "" : "+") + im.str() + "i";
  }
};

// Uniform interface over the two scalar modes: exact rational-complex and
// double-precision complex. `prune` decides when a coefficient is dropped
// from sparse storage.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<RationalComplex> {
  static RationalComplex zero() { return RationalComplex(); }
  static RationalComplex one() { return RationalComplex(Rational(1)); }
  static RationalComplex fromRational(const Rational& r) { return RationalComplex(r); }
  static RationalComplex fromDouble(double) {
    throw std::invalid_argument("exact scalar cannot be built from a double");
  }
  static RationalComplex conj(const RationalComplex& s) { return {s.re, -s.im}; }
  static bool prune(const RationalComplex& s) { return s.isZero(); }
  static double abs2(const RationalComplex& s) {
    return (s.re * s.re + s.im * s.im).toDouble();
  }
  static std::complex<double> toComplex(const RationalComplex& s) {
    return {s.re.toDouble(), s.im.toDouble()};
  }
  static std::string str(const RationalComplex& s) { return s.str(); }
};

template <>
struct ScalarOps<std::complex<double>> {
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> fromRational(const Rational& r) { return {r.toDouble(), 0.0}; }
  static std::complex<double> fromDouble(double d) { return {d, 0.0}; }
  static std::complex<double> conj(const std::complex<double>& s) { return std::conj(s); }
  static bool prune(const std::complex<double>& s) { return std::abs(s) < 1e-14; }
  static double abs2(const std::complex<double>& s) { return std::norm(s); }
  static std::complex<double> toComplex(const std::complex<double>& s) { return s; }
  static std::string str(const std::complex<double>& s) {
    return std::to_string(s.real()) + (s.imag() < 0 ? "" : "+") + std::to_string(s.imag()) + "i";
  }
};

}  // namespace hecklab
