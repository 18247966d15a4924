#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecklab/coxeter.hpp"

namespace hecklab {

// Growth series of a Coxeter group, stored as integer counts per
// multidegree (one exponent per generator). Degree 0 has count 1.
struct GrowthSeries {
  int maxDegree = 0;
  std::map<std::vector<int>, long long> coefficients;
  std::string closedForm;  // optional descriptor for supported families

  // Counts by total length 0..maxDegree.
  std::vector<long long> singleVariable() const;
};

// Counts ball elements by the exponent vector of their normal form.
GrowthSeries growthCoefficients(const CoxeterSystem& sys, int maxDegree,
                                std::size_t capElements = CoxeterSystem::defaultBallCap());

// Closed-form growth data of W = Z2^{k_1} * ... * Z2^{k_l}: the function
// ( sum_m prod_i (1+z_i^(m))^{-1} - (l-1) )^{-1}, its Taylor expansion, and
// membership in the convergence region Omega.
class FreeAbelianProductGrowth {
 public:
  explicit FreeAbelianProductGrowth(std::vector<int> ks);

  int factorCount() const { return (int)ks_.size(); }
  int generatorCount() const { return total_; }
  const std::vector<int>& factorRanks() const { return ks_; }

  // Value of the closed form at a point, one coordinate per generator
  // (grouped by factor, k_1 first). Returns nullopt when the denominator is
  // <= 0, which signals divergence of the series at that point.
  std::optional<double> evaluate(const std::vector<double>& z) const;

  // sum_m prod_i (1 + z_i^(m))^{-1}; the series converges iff this exceeds
  // l - 1 on [0,1]^S.
  double regionValue(const std::vector<double>& z) const;
  bool inOmega(const std::vector<double>& z) const;

  // Exact Taylor coefficients up to the given total degree.
  GrowthSeries taylor(int maxTotalDegree) const;

 private:
  std::vector<int> ks_;
  int total_;
};

}  // namespace hecklab
