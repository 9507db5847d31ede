#include "ncbtt/exactla/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncbtt::exactla {

SparseVector sparse_from_dense(const std::vector<Scalar>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

std::vector<Scalar> dense_from_sparse(const SparseVector& v, std::size_t n) {
  std::vector<Scalar> out(n);
  for (const auto& [i, s] : v) out.at(i) = s;
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
  SparseMatrix m(rows, 0);
  for (auto& col : columns) {
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector clean;
    for (auto& [r, s] : col) {
      if (r >= rows) throw std::out_of_range("row index out of range");
      if (!clean.empty() && clean.back().first == r) {
        clean.back().second += s;
        if (clean.back().second.is_zero()) clean.pop_back();
      } else if (!s.is_zero()) {
        clean.emplace_back(r, s);
      }
    }
    m.columns_.push_back(std::move(clean));
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Scalar(1));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= columns_.size()) throw std::out_of_range("matrix index out of range");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != col.end() && it->first == r) {
    if (v.is_zero())
      col.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    col.insert(it, {r, v});
  }
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != col.end() && it->first == r) return it->second;
  return Scalar(0);
}

std::vector<Scalar> SparseMatrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols()) throw std::invalid_argument("dimension mismatch in apply");
  std::vector<Scalar> y(rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [r, s] : columns_[c]) y[r] += s * x[c];
  }
  return y;
}

std::vector<Scalar> SparseMatrix::apply_left(const std::vector<Scalar>& f) const {
  if (f.size() != rows_) throw std::invalid_argument("dimension mismatch in apply_left");
  std::vector<Scalar> y(cols());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, s] : columns_[c])
      if (!f[r].is_zero()) y[c] += f[r] * s;
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseVector> cols(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& [r, s] : columns_[c]) cols[r].emplace_back(c, s);
  return from_columns(columns_.size(), std::move(cols));
}

}  // namespace ncbtt::exactla
