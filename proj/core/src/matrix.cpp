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

#include "extors/matrix.hpp"

namespace extors {

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::one(ring);
  return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows,
                                    const std::vector<Vec>& columns) {
  PolyMatrix m(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows)
      throw std::invalid_argument("column rank mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

PolyMatrix PolyMatrix::block_diagonal(const PolyMatrix& m,
                                      std::size_t copies) {
  PolyMatrix out(m.ring_, m.rows_ * copies, m.cols_ * copies);
  for (std::size_t b = 0; b < copies; ++b)
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j)
        out.at(b * m.rows_ + i, b * m.cols_ + j) = m.at(i, j);
  return out;
}

PolyMatrix PolyMatrix::hcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hcat row mismatch");
  PolyMatrix out(a.ring_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j)
      out.at(i, a.cols_ + j) = b.at(i, j);
  }
  return out;
}

Vec PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> entries;
  entries.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) entries.push_back(at(i, j));
  return Vec(ring_, std::move(entries));
}

std::vector<Vec> PolyMatrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Vec PolyMatrix::apply(const Vec& v) const {
  if (v.rank() != cols_) throw std::invalid_argument("apply rank mismatch");
  Vec out(ring_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (at(i, j).is_zero()) continue;
      out.entry(i) += at(i, j) * v[j];
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("product mismatch");
  PolyMatrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Polynomial sum(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || other.at(k, j).is_zero()) continue;
        sum += at(i, k) * other.at(k, j);
      }
      out.at(i, j) = std::move(sum);
    }
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& f) const {
  PolyMatrix out(*this);
  for (auto& e : out.entries_) e = e * f;
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

PolyMatrix syzygies(const PolyMatrix& m) {
  const RingPtr& ring = m.ring();
  const std::size_t r = m.rows(), c = m.cols();
  // Graph generators (column_i, e_i) in A^{r+c}; under position-over-term
  // the first r positions dominate, so basis elements with vanishing first
  // block are exactly the kernel generators.
  std::vector<Vec> graph;
  graph.reserve(c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Polynomial> entries;
    entries.reserve(r + c);
    for (std::size_t i = 0; i < r; ++i) entries.push_back(m.at(i, j));
    for (std::size_t i = 0; i < c; ++i)
      entries.push_back(i == j ? Polynomial::one(ring) : Polynomial(ring));
    graph.emplace_back(ring, std::move(entries));
  }
  ModuleGB gb(ring, r + c, std::move(graph), /*track_lifts=*/false);

  std::vector<Vec> kernel;
  for (const Vec& b : gb.basis()) {
    bool in_kernel = true;
    for (std::size_t i = 0; i < r && in_kernel; ++i)
      if (!b[i].is_zero()) in_kernel = false;
    if (!in_kernel) continue;
    std::vector<Polynomial> entries;
    entries.reserve(c);
    for (std::size_t i = 0; i < c; ++i) entries.push_back(b[r + i]);
    kernel.emplace_back(ring, std::move(entries));
  }
  return PolyMatrix::from_columns(ring, c, kernel);
}

}  // namespace extors
