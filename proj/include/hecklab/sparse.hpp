#pragma once

#include <complex>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hecklab/rational.hpp"

namespace hecklab {

// Sparse matrix in row-major coordinate storage with coalesced entries.
template <class S>
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(int rows, int cols) : rows_(rows), cols_(cols) {}

  static SparseOperator identity(int n) {
    SparseOperator out(n, n);
    for (int i = 0; i < n; ++i) out.add(i, i, ScalarOps<S>::one());
    return out;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t entryCount() const { return entries_.size(); }
  const std::map<std::pair<int, int>, S>& entries() const { return entries_; }

  void add(int r, int c, const S& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("sparse: entry index out of range");
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      if (!ScalarOps<S>::prune(v)) entries_.emplace(key, v);
      return;
    }
    it->second += v;
    if (ScalarOps<S>::prune(it->second)) entries_.erase(it);
  }

  S at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? ScalarOps<S>::zero() : it->second;
  }

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    requireSameShape(a, b);
    SparseOperator out = a;
    for (const auto& [rc, v] : b.entries_) out.add(rc.first, rc.second, v);
    return out;
  }
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    requireSameShape(a, b);
    SparseOperator out = a;
    for (const auto& [rc, v] : b.entries_) out.add(rc.first, rc.second, -v);
    return out;
  }
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("sparse: shape mismatch in product");
    SparseOperator out(a.rows_, b.cols_);
    for (const auto& [rc, va] : a.entries_) {
      auto lo = b.entries_.lower_bound({rc.second, 0});
      auto hi = b.entries_.lower_bound({rc.second + 1, 0});
      for (auto it = lo; it != hi; ++it) out.add(rc.first, it->first.second, va * it->second);
    }
    return out;
  }

  SparseOperator scaled(const S& c) const {
    SparseOperator out(rows_, cols_);
    for (const auto& [rc, v] : entries_) out.add(rc.first, rc.second, c * v);
    return out;
  }

  // Conjugate transpose.
  SparseOperator adjoint() const {
    SparseOperator out(cols_, rows_);
    for (const auto& [rc, v] : entries_) out.add(rc.second, rc.first, ScalarOps<S>::conj(v));
    return out;
  }

  bool isZero() const { return entries_.empty(); }

  friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  double maxAbs() const {
    double out = 0;
    for (const auto& [rc, v] : entries_) out = std::max(out, std::sqrt(ScalarOps<S>::abs2(v)));
    return out;
  }

  SparseOperator<std::complex<double>> toComplex() const {
    SparseOperator<std::complex<double>> out(rows_, cols_);
    for (const auto& [rc, v] : entries_)
      out.add(rc.first, rc.second, ScalarOps<S>::toComplex(v));
    return out;
  }

  void apply(const std::vector<std::complex<double>>& x,
             std::vector<std::complex<double>>& out) const {
    out.assign(rows_, {0.0, 0.0});
    for (const auto& [rc, v] : entries_)
      out[rc.first] += ScalarOps<S>::toComplex(v) * x[rc.second];
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::map<std::pair<int, int>, S> entries_;

  static void requireSameShape(const SparseOperator& a, const SparseOperator& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("sparse: shape mismatch");
  }
};

// Largest entry difference restricted to the exact window: rows/cols whose
// word length is at most `maxLength`.
template <class S>
double maxDifferenceOnWindow(const SparseOperator<S>& a, const SparseOperator<S>& b,
                             const std::vector<int>& rowLength, const std::vector<int>& colLength,
                             int maxLength) {
  SparseOperator<S> diff = a - b;
  double out = 0;
  for (const auto& [rc, v] : diff.entries()) {
    if (rowLength[rc.first] <= maxLength && colLength[rc.second] <= maxLength)
      out = std::max(out, std::sqrt(ScalarOps<S>::abs2(v)));
  }
  return out;
}

template <class S>
bool equalOnWindow(const SparseOperator<S>& a, const SparseOperator<S>& b,
                   const std::vector<int>& rowLength, const std::vector<int>& colLength,
                   int maxLength) {
  SparseOperator<S> diff = a - b;
  for (const auto& [rc, v] : diff.entries()) {
    if (rowLength[rc.first] <= maxLength && colLength[rc.second] <= maxLength &&
        !ScalarOps<S>::prune(v))
      return false;
  }
  return true;
}

struct NormEstimate {
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

// Power iteration on op* op with a deterministic start vector. The result is
// a lower bound for the spectral norm of the compression, hence for the
// operator norm on the full space.
NormEstimate normLowerBound(const SparseOperator<std::complex<double>>& op, double tol = 1e-10,
                            int maxIter = 10000);

// Matrix Market coordinate text (complex general).
void writeMatrixMarket(std::ostream& os, const SparseOperator<std::complex<double>>& op);

}  // namespace hecklab
