#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cmdi {

// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {
    if (n < 0) throw std::invalid_argument("matrix: negative size");
  }

  int size() const { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& data() const { return data_; }

  bool is_symmetric(double tol = 1e-9) const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

// Symmetric n x n nonnegative similarity/weight/distance matrix, zero diagonal.
using AffinityMatrix = SquareMatrix;

}  // namespace cmdi
