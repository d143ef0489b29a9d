// Copyright 2026 The dsclust Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSCLUST_MATRIX_HPP_
#define DSCLUST_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace dsclust {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Square, symmetric, zero-diagonal matrix of finite nonnegative conflict
// weights -ln(1 - c_jk).
class WeightMatrix {
 public:
  // Throws DomainError if `m` violates any of the invariants above.
  explicit WeightMatrix(Matrix m);

  std::size_t size() const { return m_.rows(); }
  double operator()(std::size_t j, std::size_t k) const { return m_(j, k); }
  std::span<const double> row(std::size_t j) const { return m_.row(j); }
  const Matrix& matrix() const { return m_; }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  Matrix m_;
};

}  // namespace dsclust

#endif  // DSCLUST_MATRIX_HPP_
