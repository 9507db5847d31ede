#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncbtt/algebra/algebra.hpp"

namespace ncbtt::hochschild {

using algebra::Algebra;
using algebra::AlgebraPtr;
using exactla::Scalar;

// Hard cap on stored weights; anything above is an error, never a silent truncation.
inline constexpr int kMaxWeight = 12;

class WeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlgebraMismatch : public std::invalid_argument {
 public:
  AlgebraMismatch() : std::invalid_argument("operands live over different algebras") {}
};

struct CochainTag {};
struct ChainTag {};
struct FunctionalTag {};

// Weight-indexed sparse table over words of basis letters.
//   cochain, weight n:  letters (x1..xn, out)  meaning  x1..xn |-> coef * out
//   chain,   weight n:  letters (a0, x1..xn)
//   functional on chains uses the chain layout.
// Every letter except the value/zeroth slot ranges over the reduced basis.
template <class Tag>
class Tensor {
 public:
  explicit Tensor(AlgebraPtr a) : alg_(std::move(a)) {}

  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Algebra& algebra() const { return *alg_; }
  const std::map<int, std::map<std::uint64_t, Scalar>>& parts() const { return parts_; }

  void add(const std::vector<int>& letters, const Scalar& c);
  void add_key(int weight, std::uint64_t key, const Scalar& c);
  Scalar coefficient(const std::vector<int>& letters) const;

  bool is_zero() const { return parts_.empty(); }
  std::size_t size() const;
  std::vector<int> weights() const;
  int max_weight() const { return parts_.empty() ? -1 : parts_.rbegin()->first; }

  Tensor component(int weight) const;
  Tensor parity_part(int parity) const;
  // Shifted degree of one basis entry.
  int letters_parity(const std::vector<int>& letters) const;
  bool is_homogeneous() const;
  // Shifted degree; 0 for the zero tensor, throws when mixed.
  int parity() const;

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [w, table] : parts_)
      for (const auto& [key, c] : table)
        f(w, algebra::word_from_index(key, static_cast<std::size_t>(w) + 1, alg_->dim()), c);
  }

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  Tensor operator-() const {
    Tensor t = *this;
    return t *= Scalar(-1);
  }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.parts_ == b.parts_; }

 private:
  void check_same(const Tensor& o) const;

  AlgebraPtr alg_;
  std::map<int, std::map<std::uint64_t, Scalar>> parts_;
};

using Cochain = Tensor<CochainTag>;
using Chain = Tensor<ChainTag>;
using Functional = Tensor<FunctionalTag>;

extern template class Tensor<CochainTag>;
extern template class Tensor<ChainTag>;
extern template class Tensor<FunctionalTag>;

// Letter helpers.
std::vector<int> cochain_letters(const std::vector<int>& inputs, int out);
std::vector<int> chain_letters(int a0, const std::vector<int>& word);

Cochain basis_cochain(const AlgebraPtr& a, const std::vector<int>& inputs, int out,
                      const Scalar& c = Scalar(1));
// Weight-0 cochain with the given value vector.
Cochain element_cochain(const AlgebraPtr& a, const std::vector<Scalar>& value);
Chain basis_chain(const AlgebraPtr& a, int a0, const std::vector<int>& word,
                  const Scalar& c = Scalar(1));

// Value of a cochain on a reduced word, as a dense vector over the basis.
std::vector<Scalar> evaluate(const Cochain& phi, const std::vector<int>& word);

// All reduced words of a given length, lexicographic.
std::vector<std::vector<int>> reduced_words(const Algebra& a, int length);

}  // namespace ncbtt::hochschild
