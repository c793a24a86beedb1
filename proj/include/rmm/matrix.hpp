// Copyright 2026 The rmmatch Authors
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

#ifndef RMM_MATRIX_HPP_
#define RMM_MATRIX_HPP_

#include <cstddef>
#include <vector>

namespace rmm {

/// Dense square matrix with row-major storage. Markets here are indexed by
/// type on both axes, so a square shape is all the library ever needs.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& init = T())
      : n_(n), cells_(n * n, init) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t row, std::size_t col) {
    return cells_[row * n_ + col];
  }
  const T& operator()(std::size_t row, std::size_t col) const {
    return cells_[row * n_ + col];
  }

  bool operator==(const SquareMatrix&) const = default;

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

}  // namespace rmm

#endif  // RMM_MATRIX_HPP_
