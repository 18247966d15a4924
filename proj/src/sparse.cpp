#include "hecklab/sparse.hpp"

#include <cmath>

#include "hecklab/numeric.hpp"

namespace hecklab {

NormEstimate normLowerBound(const SparseOperator<std::complex<double>>& op, double tol,
                            int maxIter) {
  NormEstimate est;
  if (op.isZero() || op.cols() == 0 || op.rows() == 0) {
    est.converged = true;
    return est;
  }
  Rng rng(0x6f636b21);
  std::vector<std::complex<double>> v(op.cols());
  double vnorm = 0;
  for (auto& x : v) {
    x = {rng.nextUniform() + 0.5, 0.0};
    vnorm += std::norm(x);
  }
  vnorm = std::sqrt(vnorm);
  for (auto& x : v) x /= vnorm;

  SparseOperator<std::complex<double>> adj = op.adjoint();
  std::vector<std::complex<double>> mid, next;
  double prev = 0;
  for (int it = 1; it <= maxIter; ++it) {
    op.apply(v, mid);
    adj.apply(mid, next);
    double norm = 0;
    for (auto& x : next) norm += std::norm(x);
    norm = std::sqrt(norm);
    est.iterations = it;
    if (norm < 1e-300) {
      est.value = 0;
      est.converged = true;
      return est;
    }
    est.value = std::sqrt(norm);
    for (auto& x : next) x /= norm;
    v = next;
    if (it > 2 && std::abs(est.value - prev) <= tol * std::max(1.0, est.value)) {
      est.converged = true;
      return est;
    }
    prev = est.value;
  }
  est.converged = false;
  return est;
}

void writeMatrixMarket(std::ostream& os, const SparseOperator<std::complex<double>>& op) {
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << op.rows() << " " << op.cols() << " " << op.entryCount() << "\n";
  os.precision(17);
  for (const auto& [rc, v] : op.entries())
    os << rc.first + 1 << " " << rc.second + 1 << " " << v.real() << " " << v.imag() << "\n";
}

}  // namespace hecklab
