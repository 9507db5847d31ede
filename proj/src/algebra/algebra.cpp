#include "ncbtt/algebra/algebra.hpp"

#include <stdexcept>

namespace ncbtt::algebra {

std::size_t word_index(const std::vector<int>& word, std::size_t dim) {
  std::size_t idx = 0;
  for (int w : word) idx = idx * dim + static_cast<std::size_t>(w);
  return idx;
}

std::vector<int> word_from_index(std::uint64_t index, std::size_t length, std::size_t dim) {
  std::vector<int> w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<int>(index % dim);
    index /= dim;
  }
  return w;
}

Algebra::Algebra(std::string name, Field field, std::vector<BasisElement> basis, std::size_t unit,
                 int pairing_parity)
    : name_(std::move(name)),
      field_(field),
      basis_(std::move(basis)),
      unit_(unit),
      pairing_parity_(pairing_parity),
      pairing_(basis_.size() * basis_.size()) {
  if (basis_.empty()) throw std::invalid_argument("empty basis");
  if (unit_ >= basis_.size()) throw std::invalid_argument("unit out of range");
}

std::optional<std::size_t> Algebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

bool Algebra::is_associative() const {
  for (const auto& [k, table] : products_) {
    if (k == 2) continue;
    for (const auto& out : table)
      if (!out.empty()) return false;
  }
  return true;
}

const SparseVector& Algebra::product(int k, const std::vector<int>& word) const {
  static const SparseVector empty;
  auto it = products_.find(k);
  if (it == products_.end()) return empty;
  return it->second[word_index(word, dim())];
}

void Algebra::add_product(int k, const std::vector<int>& word, const SparseVector& out) {
  if (k < 1 || static_cast<int>(word.size()) != k)
    throw std::invalid_argument("product arity mismatch");
  auto& table = products_[k];
  if (table.empty()) {
    std::size_t n = 1;
    for (int i = 0; i < k; ++i) n *= dim();
    table.resize(n);
  }
  auto& slot = table[word_index(word, dim())];
  std::vector<Scalar> dense = exactla::dense_from_sparse(slot, dim());
  for (const auto& [i, s] : out) dense.at(i) += s;
  slot = exactla::sparse_from_dense(dense);
}

std::vector<ProductTerm> Algebra::terms(int k) const {
  std::vector<ProductTerm> out;
  auto it = products_.find(k);
  if (it == products_.end()) return out;
  for (std::size_t idx = 0; idx < it->second.size(); ++idx)
    for (const auto& [o, s] : it->second[idx])
      out.push_back({word_from_index(idx, static_cast<std::size_t>(k), dim()), static_cast<int>(o), s});
  return out;
}

std::vector<ProductTerm> Algebra::shifted_terms(int k) const {
  auto out = terms(k);
  for (auto& t : out) {
    int e = 0;
    for (int i = 0; i < k; ++i) e += (k - 1 - i) * parity(static_cast<std::size_t>(t.inputs[i]));
    if (e & 1) t.coef = -t.coef;
  }
  return out;
}

std::vector<int> Algebra::arities() const {
  std::vector<int> out;
  for (const auto& [k, table] : products_) {
    for (const auto& o : table)
      if (!o.empty()) {
        out.push_back(k);
        break;
      }
  }
  return out;
}

std::vector<Scalar> Algebra::multiply(int k, const std::vector<std::vector<Scalar>>& args) const {
  std::vector<Scalar> out(dim());
  for (const auto& t : terms(k)) {
    Scalar c = t.coef;
    for (int i = 0; i < k && !c.is_zero(); ++i) c *= args[i][t.inputs[i]];
    if (!c.is_zero()) out[t.output] += c;
  }
  return out;
}

std::string Algebra::describe(const std::vector<int>& word) const {
  std::string s = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += basis_[word[i]].name;
  }
  return s + ")";
}

}  // namespace ncbtt::algebra
