// Copyright 2026 The rpdlp authors.
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

#ifndef RPDLP_SPARSE_MATRIX_HPP_
#define RPDLP_SPARSE_MATRIX_HPP_

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

namespace rpdlp {

using Index = std::int64_t;

struct Triplet {
  Index row = 0;
  Index col = 0;
  double value = 0.0;
};

// Sparse matrix stored in both compressed-row and compressed-column layout.
// Both layouts are materialized at construction so that M*x and M^T*y are
// cheap inside the iteration loop. Immutable after construction.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  // Duplicate (row, col) entries are summed; entries that are (or sum to)
  // exactly zero are dropped.
  static SparseMatrix FromTriplets(Index n_rows, Index n_cols,
                                   std::vector<Triplet> triplets);

  // Stacks `top` above `bottom`; column counts must match.
  static SparseMatrix VStack(const SparseMatrix& top,
                             const SparseMatrix& bottom);

  Index rows() const { return n_rows_; }
  Index cols() const { return n_cols_; }
  Index nnz() const { return static_cast<Index>(csr_values_.size()); }

  // y = M x (CSR layout).
  void Multiply(std::span<const double> x, std::span<double> y) const;
  // y = M^T x (CSC layout).
  void MultiplyTranspose(std::span<const double> x, std::span<double> y) const;

  // y += alpha * M x and y += alpha * M^T x.
  void MultiplyAdd(double alpha, std::span<const double> x,
                   std::span<double> y) const;
  void MultiplyTransposeAdd(double alpha, std::span<const double> x,
                            std::span<double> y) const;

  std::vector<double> RowInfNorms() const;
  std::vector<double> ColInfNorms() const;

  // Entrywise |M_ij|^p summed per row / per column.
  std::vector<double> RowPowerSums(double p) const;
  std::vector<double> ColPowerSums(double p) const;

  // D_r M D_c for positive diagonal scale vectors.
  SparseMatrix Scaled(std::span<const double> row_scale,
                      std::span<const double> col_scale) const;

  // Rows [begin, end) as a new matrix.
  SparseMatrix RowSlice(Index begin, Index end) const;

  std::vector<Triplet> ToTriplets() const;

  bool operator==(const SparseMatrix& other) const = default;

  // CSR accessors.
  const std::vector<Index>& row_ptr() const { return row_ptr_; }
  const std::vector<Index>& col_idx() const { return col_idx_; }
  const std::vector<double>& csr_values() const { return csr_values_; }
  // CSC accessors.
  const std::vector<Index>& col_ptr() const { return col_ptr_; }
  const std::vector<Index>& row_idx() const { return row_idx_; }
  const std::vector<double>& csc_values() const { return csc_values_; }

 private:
  void BuildCscFromCsr();

  Index n_rows_ = 0;
  Index n_cols_ = 0;
  std::vector<Index> row_ptr_{0};
  std::vector<Index> col_idx_;
  std::vector<double> csr_values_;
  std::vector<Index> col_ptr_{0};
  std::vector<Index> row_idx_;
  std::vector<double> csc_values_;
};

}  // namespace rpdlp

#endif  // RPDLP_SPARSE_MATRIX_HPP_
