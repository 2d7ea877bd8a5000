// Copyright 2026 The extors Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "extors/free_module.hpp"

namespace extors {

/// Matrix of polynomials, viewed as a map A^cols -> A^rows on columns.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)),
        rows_(rows),
        cols_(cols),
        entries_(rows * cols, Polynomial(ring_)) {}

  static PolyMatrix identity(RingPtr ring, std::size_t n);
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows,
                                 const std::vector<Vec>& columns);
  /// Block-diagonal with `copies` copies of m.
  static PolyMatrix block_diagonal(const PolyMatrix& m, std::size_t copies);
  /// Horizontal concatenation [a | b].
  static PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Polynomial& at(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  Vec column(std::size_t j) const;
  std::vector<Vec> columns() const;

  Vec apply(const Vec& v) const;  // matrix * column vector
  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix transpose() const;
  PolyMatrix scaled(const Polynomial& f) const;
  bool is_zero() const;

  bool operator==(const PolyMatrix& other) const;
  bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// Generators of ker(m : A^cols -> A^rows) as the columns of the result
/// (a cols x k matrix). Computed by a position-over-term elimination on the
/// graph module spanned by (column_i, e_i).
PolyMatrix syzygies(const PolyMatrix& m);

}  // namespace extors
