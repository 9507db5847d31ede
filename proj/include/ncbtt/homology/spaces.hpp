#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ncbtt/exactla/sparse_matrix.hpp"
#include "ncbtt/hochschild/tensor.hpp"

namespace ncbtt::homology {

using algebra::AlgebraPtr;
using exactla::Field;
using exactla::Scalar;
using exactla::SparseMatrix;
using exactla::SparseVector;
using hochschild::Cochain;

enum class Variant { normalized, strict };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);

// Raised when a request needs weights beyond the configured window.
class WindowError : public std::runtime_error {
 public:
  WindowError(const std::string& what, int needed) : std::runtime_error(what), needed_(needed) {}
  int needed() const { return needed_; }

 private:
  int needed_;
};

// Weight grading only makes sense when the structure is a plain product.
class UnsupportedAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Monomial cochains x1..xn |-> out of one weight, sorted by key.
class Ambient {
 public:
  Ambient(const algebra::Algebra& a, int weight);
  int weight() const { return weight_; }
  std::size_t size() const { return keys_.size(); }
  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  int parity(std::size_t i) const { return parity_[i]; }
  std::size_t index(std::uint64_t key) const;
  SparseVector coords(const Cochain& phi) const;
  Cochain cochain(const AlgebraPtr& a, const SparseVector& v) const;

 private:
  int weight_;
  std::vector<std::uint64_t> keys_;
  std::vector<int> parity_;
  std::map<std::uint64_t, std::size_t> index_;
};

// Monomial spaces and the matrices of delta and Delta up to a maximal weight.
class CochainComplex {
 public:
  CochainComplex(AlgebraPtr a, int window, Field field);
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  int window() const { return window_; }
  const Field& field() const { return field_; }

  const Ambient& ambient(int weight) const;
  // weight -> weight + 1
  const SparseMatrix& hoch(int weight) const;
  // weight -> weight - 1; empty for weight 0
  const SparseMatrix& connes(int weight) const;

  // Basis of the weight-n, parity-p piece, as ambient vectors.
  std::vector<SparseVector> basis(int weight, int parity, Variant v, bool cyclic) const;

 private:
  void check(int weight) const;
  AlgebraPtr alg_;
  int window_;
  Field field_;
  mutable std::map<int, std::unique_ptr<Ambient>> ambient_;
  mutable std::map<int, SparseMatrix> hoch_, connes_;
};

void require_weight_graded(const algebra::Algebra& a);

}  // namespace ncbtt::homology
