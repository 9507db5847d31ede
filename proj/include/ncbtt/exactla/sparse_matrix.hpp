#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ncbtt/exactla/scalar.hpp"

namespace ncbtt::exactla {

// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector sparse_from_dense(const std::vector<Scalar>& v);
std::vector<Scalar> dense_from_sparse(const SparseVector& v, std::size_t n);

// Column-major sparse matrix with fixed shape.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols);
  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;

  void set(std::size_t r, std::size_t c, const Scalar& v);
  Scalar at(std::size_t r, std::size_t c) const;
  const SparseVector& column(std::size_t c) const { return columns_.at(c); }

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;         // M x
  std::vector<Scalar> apply_left(const std::vector<Scalar>& f) const;    // f M
  SparseMatrix transpose() const;

 private:
  std::size_t rows_;
  std::vector<SparseVector> columns_;
};

}  // namespace ncbtt::exactla
