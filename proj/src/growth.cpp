#include "hecklab/growth.hpp"

#include <numeric>
#include <stdexcept>

namespace hecklab {

std::vector<long long> GrowthSeries::singleVariable() const {
  std::vector<long long> out(maxDegree + 1, 0);
  for (const auto& [alpha, count] : coefficients) {
    int total = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (total <= maxDegree) out[total] += count;
  }
  return out;
}

GrowthSeries growthCoefficients(const CoxeterSystem& sys, int maxDegree,
                                std::size_t capElements) {
  GrowthSeries series;
  series.maxDegree = maxDegree;
  for (const GroupElement& g : sys.ball(maxDegree, capElements)) {
    std::vector<int> alpha(sys.rank(), 0);
    for (int s : g.nf) alpha[s]++;
    series.coefficients[alpha]++;
  }
  return series;
}

namespace {

// Truncated multivariate polynomial with integer coefficients.
using Poly = std::map<std::vector<int>, long long>;

int totalDegree(const std::vector<int>& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

Poly mul(const Poly& a, const Poly& b, int cap) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    int da = totalDegree(ea);
    for (const auto& [eb, cb] : b) {
      if (da + totalDegree(eb) > cap) continue;
      std::vector<int> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly add(Poly a, const Poly& b, long long scale = 1) {
  for (const auto& [e, c] : b) {
    a[e] += scale * c;
    if (a[e] == 0) a.erase(e);
  }
  return a;
}

// (1 - u)^{-1} = sum u^m for u with zero constant term.
Poly geometricInverse(const Poly& u, int cap, const std::vector<int>& zeroExp) {
  Poly one{{zeroExp, 1}};
  Poly out = one, power = one;
  for (int m = 1; m <= cap; ++m) {
    power = mul(power, u, cap);
    if (power.empty()) break;
    out = add(out, power);
  }
  return out;
}

}  // namespace

FreeAbelianProductGrowth::FreeAbelianProductGrowth(std::vector<int> ks) : ks_(std::move(ks)) {
  if (ks_.empty()) throw std::invalid_argument("free abelian product: need at least one factor");
  for (int k : ks_)
    if (k < 1) throw std::invalid_argument("free abelian product: factor ranks must be >= 1");
  total_ = std::accumulate(ks_.begin(), ks_.end(), 0);
}

double FreeAbelianProductGrowth::regionValue(const std::vector<double>& z) const {
  if ((int)z.size() != total_) throw std::invalid_argument("regionValue: wrong coordinate count");
  double sum = 0;
  int offset = 0;
  for (int k : ks_) {
    double prod = 1;
    for (int i = 0; i < k; ++i) prod /= 1.0 + z[offset + i];
    sum += prod;
    offset += k;
  }
  return sum;
}

std::optional<double> FreeAbelianProductGrowth::evaluate(const std::vector<double>& z) const {
  double denom = regionValue(z) - (double)(factorCount() - 1);
  if (denom <= 0) return std::nullopt;
  return 1.0 / denom;
}

bool FreeAbelianProductGrowth::inOmega(const std::vector<double>& z) const {
  for (double v : z)
    if (v < 0 || v > 1) return false;
  return regionValue(z) > (double)(factorCount() - 1);
}

GrowthSeries FreeAbelianProductGrowth::taylor(int maxTotalDegree) const {
  const int cap = maxTotalDegree;
  const std::vector<int> zeroExp(total_, 0);
  Poly one{{zeroExp, 1}};

  // sum_m prod_i (1 + z_i)^{-1} - (l - 1), an integer series with constant
  // term 1, then inverted geometrically.
  Poly denom;
  int offset = 0;
  for (int k : ks_) {
    Poly prod = one;
    for (int i = 0; i < k; ++i) {
      Poly inv;  // (1+z)^{-1} truncated
      for (int d = 0; d <= cap; ++d) {
        std::vector<int> e = zeroExp;
        e[offset + i] = d;
        inv[e] = (d % 2 == 0) ? 1 : -1;
      }
      prod = mul(prod, inv, cap);
    }
    denom = add(denom, prod);
    offset += k;
  }
  denom = add(denom, one, -(long long)(factorCount() - 1));

  Poly u = add(one, denom, -1);  // 1 - denom, zero constant term
  Poly w = geometricInverse(u, cap, zeroExp);

  GrowthSeries series;
  series.maxDegree = cap;
  series.closedForm = "free-abelian-product";
  for (const auto& [e, c] : w)
    if (c != 0) series.coefficients[e] = c;
  return series;
}

}  // namespace hecklab
