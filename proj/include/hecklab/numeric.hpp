#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hecklab {

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
// ascending. Sizes here are tiny (one row per generator).
std::vector<double> symmetricEigenvalues(std::vector<std::vector<double>> m);

// Deterministic generator for experiments; splitmix64-seeded xoshiro-free
// minimal engine plus Box-Muller normals, so that identical seeds give
// identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t nextU64();
  double nextUniform();                  // in [0,1)
  double nextGaussian();                 // standard normal
  std::complex<double> nextComplexGaussian();  // independent N(0,1) parts

 private:
  std::uint64_t state_;
  bool haveSpare_ = false;
  double spare_ = 0.0;
};

// Largest singular value of a dense complex matrix (power iteration on
// m* m with deterministic start).
double denseSpectralNorm(const std::vector<std::vector<std::complex<double>>>& m,
                         double tol = 1e-12, int maxIter = 20000);

}  // namespace hecklab
