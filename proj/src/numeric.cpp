#include "hecklab/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace hecklab {

std::vector<double> symmetricEigenvalues(std::vector<std::vector<double>> m) {
  const int n = (int)m.size();
  if (n == 0) return {};
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = m[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

Rng::Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

std::uint64_t Rng::nextU64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::nextUniform() { return (nextU64() >> 11) * 0x1.0p-53; }

double Rng::nextGaussian() {
  if (haveSpare_) {
    haveSpare_ = false;
    return spare_;
  }
  double u1 = 0;
  while (u1 <= 1e-300) u1 = nextUniform();
  double u2 = nextUniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(a);
  haveSpare_ = true;
  return r * std::cos(a);
}

std::complex<double> Rng::nextComplexGaussian() {
  double re = nextGaussian();
  double im = nextGaussian();
  return {re, im};
}

double denseSpectralNorm(const std::vector<std::vector<std::complex<double>>>& m,
                         double tol, int maxIter) {
  const int rows = (int)m.size();
  if (rows == 0) return 0.0;
  const int cols = (int)m[0].size();
  if (cols == 0) return 0.0;
  Rng rng(12345);
  std::vector<std::complex<double>> v(cols);
  for (auto& x : v) x = {rng.nextUniform() + 0.5, 0.0};
  double prev = 0.0;
  for (int it = 0; it < maxIter; ++it) {
    std::vector<std::complex<double>> mv(rows, 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) mv[i] += m[i][j] * v[j];
    std::vector<std::complex<double>> w(cols, 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[j] += std::conj(m[i][j]) * mv[i];
    double norm = 0;
    for (auto& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm < 1e-300) return 0.0;
    for (auto& x : w) x /= norm;
    double est = std::sqrt(norm);
    if (it > 2 && std::abs(est - prev) <= tol * std::max(1.0, est)) return est;
    prev = est;
    v = std::move(w);
  }
  return prev;
}

}  // namespace hecklab
