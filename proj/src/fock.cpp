#include "hecklab/fock.hpp"

#include <cmath>
#include <numeric>

namespace hecklab {

BallBasis::BallBasis(const CoxeterSystem& sys, int radius, std::size_t capElements)
    : sys_(&sys), radius_(radius) {
  elements_ = sys.ball(radius, capElements);
  for (int i = 0; i < (int)elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
    lengths_.push_back(elements_[i].length());
  }
}

int BallBasis::indexOf(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

AbelianVertexAlgebra::AbelianVertexAlgebra(int points, std::vector<double> stateWeights)
    : pointCount(points), weights(std::move(stateWeights)) {
  if (pointCount < 2) throw std::invalid_argument("vertex algebra: need at least 2 points");
  if ((int)weights.size() != pointCount)
    throw std::invalid_argument("vertex algebra: one weight per point required");
  double sum = 0;
  for (double w : weights) {
    if (!(w > 0)) throw std::invalid_argument("vertex algebra: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("vertex algebra: weights must sum to 1");

  auto inner = [&](const std::vector<double>& f, const std::vector<double>& g) {
    double out = 0;
    for (int k = 0; k < pointCount; ++k) out += weights[k] * f[k] * g[k];
    return out;
  };
  // Gram-Schmidt on e_j - mu_j 1, j = 1..pointCount-1.
  for (int j = 0; j < pointCount - 1; ++j) {
    std::vector<double> u(pointCount, -weights[j]);
    u[j] += 1.0;
    for (const auto& e : meanZeroBasis) {
      double c = inner(u, e);
      for (int k = 0; k < pointCount; ++k) u[k] -= c * e[k];
    }
    double norm = std::sqrt(inner(u, u));
    if (norm < 1e-12) throw std::invalid_argument("vertex algebra: degenerate state");
    for (double& x : u) x /= norm;
    meanZeroBasis.push_back(std::move(u));
  }
}

std::vector<double> AbelianVertexAlgebra::meanZeroValues(
    const std::vector<double>& pointValues) const {
  double mean = 0;
  for (int k = 0; k < pointCount; ++k) mean += weights[k] * pointValues[k];
  std::vector<double> out = pointValues;
  for (double& x : out) x -= mean;
  return out;
}

VertexElement<std::complex<double>> AbelianVertexAlgebra::element(
    const std::vector<double>& pointValues) const {
  if ((int)pointValues.size() != pointCount)
    throw std::invalid_argument("vertex algebra: one value per point required");
  const int r = reducedDim();
  VertexElement<std::complex<double>> e;
  double mean = 0;
  for (int k = 0; k < pointCount; ++k) mean += weights[k] * pointValues[k];
  e.mean = {mean, 0.0};
  e.create.resize(r);
  e.annihilate.resize(r);
  e.compress.assign(r, std::vector<std::complex<double>>(r));
  for (int c = 0; c < r; ++c) {
    double amp = 0;
    for (int k = 0; k < pointCount; ++k)
      amp += weights[k] * pointValues[k] * meanZeroBasis[c][k];
    e.create[c] = {amp, 0.0};
    e.annihilate[c] = {amp, 0.0};
  }
  for (int c = 0; c < r; ++c)
    for (int cp = 0; cp < r; ++cp) {
      double m = 0;
      for (int k = 0; k < pointCount; ++k)
        m += weights[k] * pointValues[k] * meanZeroBasis[c][k] * meanZeroBasis[cp][k];
      e.compress[cp][c] = {m, 0.0};
    }
  return e;
}

AbelianVertexAlgebra heckeVertexAlgebra(double q) {
  if (!(q > 0)) throw std::invalid_argument("hecke vertex algebra: q must be positive");
  return AbelianVertexAlgebra(2, {1.0 / (1.0 + q), q / (1.0 + q)});
}

}  // namespace hecklab
