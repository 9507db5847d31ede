#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncbtt/exactla/scalar.hpp"
#include "ncbtt/exactla/sparse_matrix.hpp"

namespace ncbtt::algebra {

using exactla::Field;
using exactla::Scalar;
using exactla::SparseVector;

struct BasisElement {
  std::string name;
  int parity = 0;
};

struct Annotations {
  std::optional<bool> smooth;
  bool expect_valid = true;
  std::string notes;
};

// One nonzero structure constant m_k(e_{in[0]}, ..., e_{in[k-1]}) = coef * e_out.
struct ProductTerm {
  std::vector<int> inputs;
  int output = 0;
  Scalar coef;
};

// Finite-dimensional Z/2-graded A-infinity algebra with a designated unit basis
// vector and a bilinear pairing, given by structure constants.
class Algebra {
 public:
  Algebra(std::string name, Field field, std::vector<BasisElement> basis, std::size_t unit,
          int pairing_parity);

  const std::string& name() const { return name_; }
  Field field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t unit() const { return unit_; }
  const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int parity(std::size_t i) const { return basis_[i].parity; }
  // Degree of s e_i.
  int shifted(std::size_t i) const { return basis_[i].parity ^ 1; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  int pairing_parity() const { return pairing_parity_; }
  const Scalar& pair(std::size_t i, std::size_t j) const { return pairing_[i * dim() + j]; }
  void set_pair(std::size_t i, std::size_t j, const Scalar& v) { pairing_[i * dim() + j] = v; }

  int k_max() const { return products_.empty() ? 0 : products_.rbegin()->first; }
  bool is_associative() const;
  // Sparse output of m_k on a basis word.
  const SparseVector& product(int k, const std::vector<int>& word) const;
  void add_product(int k, const std::vector<int>& word, const SparseVector& out);
  // Nonzero terms of m_k in lexicographic input order.
  std::vector<ProductTerm> terms(int k) const;
  // Same terms with the suspension sign (-1)^{sum_i (k-i)|a_i|}.
  std::vector<ProductTerm> shifted_terms(int k) const;
  std::vector<int> arities() const;

  std::vector<Scalar> multiply(int k, const std::vector<std::vector<Scalar>>& args) const;

  Annotations& annotations() { return annotations_; }
  const Annotations& annotations() const { return annotations_; }

  std::string describe(const std::vector<int>& word) const;

 private:
  std::string name_;
  Field field_;
  std::vector<BasisElement> basis_;
  std::size_t unit_;
  int pairing_parity_;
  std::vector<Scalar> pairing_;
  std::map<int, std::vector<SparseVector>> products_;
  Annotations annotations_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

std::size_t word_index(const std::vector<int>& word, std::size_t dim);
std::vector<int> word_from_index(std::uint64_t index, std::size_t length, std::size_t dim);

}  // namespace ncbtt::algebra
