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

#include "rpdlp/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace rpdlp {

SparseMatrix SparseMatrix::FromTriplets(Index n_rows, Index n_cols,
                                        std::vector<Triplet> triplets) {
  if (n_rows < 0 || n_cols < 0) {
    throw std::invalid_argument("negative matrix dimension");
  }
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= n_rows || t.col < 0 || t.col >= n_cols) {
      throw std::out_of_range("triplet index out of range");
    }
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return std::tie(a.row, a.col) < std::tie(b.row, b.col);
            });

  SparseMatrix m;
  m.n_rows_ = n_rows;
  m.n_cols_ = n_cols;
  m.row_ptr_.assign(static_cast<size_t>(n_rows) + 1, 0);
  m.col_idx_.reserve(triplets.size());
  m.csr_values_.reserve(triplets.size());

  size_t i = 0;
  while (i < triplets.size()) {
    const Index r = triplets[i].row;
    const Index c = triplets[i].col;
    double v = 0.0;
    while (i < triplets.size() && triplets[i].row == r &&
           triplets[i].col == c) {
      v += triplets[i].value;
      ++i;
    }
    if (v != 0.0) {
      m.col_idx_.push_back(c);
      m.csr_values_.push_back(v);
      ++m.row_ptr_[static_cast<size_t>(r) + 1];
    }
  }
  for (Index r = 0; r < n_rows; ++r) {
    m.row_ptr_[static_cast<size_t>(r) + 1] +=
        m.row_ptr_[static_cast<size_t>(r)];
  }
  m.BuildCscFromCsr();
  return m;
}

void SparseMatrix::BuildCscFromCsr() {
  col_ptr_.assign(static_cast<size_t>(n_cols_) + 1, 0);
  row_idx_.assign(csr_values_.size(), 0);
  csc_values_.assign(csr_values_.size(), 0.0);
  for (Index j : col_idx_) ++col_ptr_[static_cast<size_t>(j) + 1];
  for (Index j = 0; j < n_cols_; ++j) {
    col_ptr_[static_cast<size_t>(j) + 1] += col_ptr_[static_cast<size_t>(j)];
  }
  std::vector<Index> next(col_ptr_.begin(), col_ptr_.end() - 1);
  for (Index r = 0; r < n_rows_; ++r) {
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const Index j = col_idx_[k];
      const Index dst = next[j]++;
      row_idx_[dst] = r;
      csc_values_[dst] = csr_values_[k];
    }
  }
}

SparseMatrix SparseMatrix::VStack(const SparseMatrix& top,
                                  const SparseMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("VStack: column count mismatch");
  }
  SparseMatrix m;
  m.n_rows_ = top.rows() + bottom.rows();
  m.n_cols_ = top.cols();
  m.row_ptr_.reserve(static_cast<size_t>(m.n_rows_) + 1);
  m.row_ptr_ = top.row_ptr_;
  const Index offset = top.nnz();
  for (size_t i = 1; i < bottom.row_ptr_.size(); ++i) {
    m.row_ptr_.push_back(bottom.row_ptr_[i] + offset);
  }
  m.col_idx_ = top.col_idx_;
  m.col_idx_.insert(m.col_idx_.end(), bottom.col_idx_.begin(),
                    bottom.col_idx_.end());
  m.csr_values_ = top.csr_values_;
  m.csr_values_.insert(m.csr_values_.end(), bottom.csr_values_.begin(),
                       bottom.csr_values_.end());
  m.BuildCscFromCsr();
  return m;
}

void SparseMatrix::Multiply(std::span<const double> x,
                            std::span<double> y) const {
  assert(static_cast<Index>(x.size()) == n_cols_);
  assert(static_cast<Index>(y.size()) == n_rows_);
  for (Index r = 0; r < n_rows_; ++r) {
    double acc = 0.0;
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      acc += csr_values_[k] * x[col_idx_[k]];
    }
    y[r] = acc;
  }
}

void SparseMatrix::MultiplyTranspose(std::span<const double> x,
                                     std::span<double> y) const {
  assert(static_cast<Index>(x.size()) == n_rows_);
  assert(static_cast<Index>(y.size()) == n_cols_);
  for (Index j = 0; j < n_cols_; ++j) {
    double acc = 0.0;
    for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
      acc += csc_values_[k] * x[row_idx_[k]];
    }
    y[j] = acc;
  }
}

void SparseMatrix::MultiplyAdd(double alpha, std::span<const double> x,
                               std::span<double> y) const {
  assert(static_cast<Index>(x.size()) == n_cols_);
  assert(static_cast<Index>(y.size()) == n_rows_);
  for (Index r = 0; r < n_rows_; ++r) {
    double acc = 0.0;
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      acc += csr_values_[k] * x[col_idx_[k]];
    }
    y[r] += alpha * acc;
  }
}

void SparseMatrix::MultiplyTransposeAdd(double alpha, std::span<const double> x,
                                        std::span<double> y) const {
  assert(static_cast<Index>(x.size()) == n_rows_);
  assert(static_cast<Index>(y.size()) == n_cols_);
  for (Index j = 0; j < n_cols_; ++j) {
    double acc = 0.0;
    for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
      acc += csc_values_[k] * x[row_idx_[k]];
    }
    y[j] += alpha * acc;
  }
}

std::vector<double> SparseMatrix::RowInfNorms() const {
  std::vector<double> norms(static_cast<size_t>(n_rows_), 0.0);
  for (Index r = 0; r < n_rows_; ++r) {
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      norms[r] = std::max(norms[r], std::abs(csr_values_[k]));
    }
  }
  return norms;
}

std::vector<double> SparseMatrix::ColInfNorms() const {
  std::vector<double> norms(static_cast<size_t>(n_cols_), 0.0);
  for (Index j = 0; j < n_cols_; ++j) {
    for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
      norms[j] = std::max(norms[j], std::abs(csc_values_[k]));
    }
  }
  return norms;
}

std::vector<double> SparseMatrix::RowPowerSums(double p) const {
  std::vector<double> sums(static_cast<size_t>(n_rows_), 0.0);
  for (Index r = 0; r < n_rows_; ++r) {
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      sums[r] += std::pow(std::abs(csr_values_[k]), p);
    }
  }
  return sums;
}

std::vector<double> SparseMatrix::ColPowerSums(double p) const {
  std::vector<double> sums(static_cast<size_t>(n_cols_), 0.0);
  for (Index j = 0; j < n_cols_; ++j) {
    for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
      sums[j] += std::pow(std::abs(csc_values_[k]), p);
    }
  }
  return sums;
}

SparseMatrix SparseMatrix::Scaled(std::span<const double> row_scale,
                                  std::span<const double> col_scale) const {
  assert(static_cast<Index>(row_scale.size()) == n_rows_);
  assert(static_cast<Index>(col_scale.size()) == n_cols_);
  SparseMatrix m = *this;
  for (Index r = 0; r < n_rows_; ++r) {
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      m.csr_values_[k] = row_scale[r] * csr_values_[k] * col_scale[col_idx_[k]];
    }
  }
  for (Index j = 0; j < n_cols_; ++j) {
    for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
      m.csc_values_[k] = row_scale[row_idx_[k]] * csc_values_[k] * col_scale[j];
    }
  }
  return m;
}

SparseMatrix SparseMatrix::RowSlice(Index begin, Index end) const {
  assert(begin >= 0 && begin <= end && end <= n_rows_);
  SparseMatrix m;
  m.n_rows_ = end - begin;
  m.n_cols_ = n_cols_;
  m.row_ptr_.assign(1, 0);
  const Index base = row_ptr_[begin];
  for (Index r = begin; r < end; ++r) {
    m.row_ptr_.push_back(row_ptr_[r + 1] - base);
  }
  m.col_idx_.assign(col_idx_.begin() + base, col_idx_.begin() + row_ptr_[end]);
  m.csr_values_.assign(csr_values_.begin() + base,
                       csr_values_.begin() + row_ptr_[end]);
  m.BuildCscFromCsr();
  return m;
}

std::vector<Triplet> SparseMatrix::ToTriplets() const {
  std::vector<Triplet> out;
  out.reserve(csr_values_.size());
  for (Index r = 0; r < n_rows_; ++r) {
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      out.push_back({r, col_idx_[k], csr_values_[k]});
    }
  }
  return out;
}

}  // namespace rpdlp
