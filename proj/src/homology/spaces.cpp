#include "ncbtt/homology/spaces.hpp"

#include <algorithm>

#include "ncbtt/hochschild/cyclic.hpp"
#include "ncbtt/hochschild/operators.hpp"

namespace ncbtt::homology {

const char* variant_name(Variant v) { return v == Variant::strict ? "strict" : "normalized"; }

Variant parse_variant(const std::string& s) {
  if (s == "normalized") return Variant::normalized;
  if (s == "strict") return Variant::strict;
  throw std::invalid_argument("variant must be normalized or strict, got '" + s + "'");
}

void require_weight_graded(const algebra::Algebra& a) {
  for (int k : a.arities())
    if (k != 2)
      throw UnsupportedAlgebra("weight-graded cohomology needs a structure concentrated in arity 2 ('" +
                               a.name() + "' has m_" + std::to_string(k) + ")");
}

Ambient::Ambient(const algebra::Algebra& a, int weight) : weight_(weight) {
  for (const auto& word : hochschild::reduced_words(a, weight))
    for (std::size_t o = 0; o < a.dim(); ++o)
      keys_.push_back(algebra::word_index(hochschild::cochain_letters(word, static_cast<int>(o)), a.dim()));
  std::sort(keys_.begin(), keys_.end());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    index_[keys_[i]] = i;
    int p = 0;
    for (int l : algebra::word_from_index(keys_[i], static_cast<std::size_t>(weight) + 1, a.dim()))
      p += a.shifted(static_cast<std::size_t>(l));
    parity_.push_back(p & 1);
  }
}

std::size_t Ambient::index(std::uint64_t key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw std::out_of_range("cochain entry outside the monomial basis");
  return it->second;
}

SparseVector Ambient::coords(const Cochain& phi) const {
  SparseVector v;
  for (int w : phi.weights())
    if (w != weight_) throw std::invalid_argument("cochain has a component outside weight " + std::to_string(weight_));
  auto it = phi.parts().find(weight_);
  if (it == phi.parts().end()) return v;
  for (const auto& [key, c] : it->second) v.emplace_back(index(key), c);
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

Cochain Ambient::cochain(const AlgebraPtr& a, const SparseVector& v) const {
  Cochain phi(a);
  for (const auto& [i, c] : v) phi.add_key(weight_, keys_.at(i), c);
  return phi;
}

CochainComplex::CochainComplex(AlgebraPtr a, int window, Field field)
    : alg_(std::move(a)), window_(window), field_(field) {
  require_weight_graded(*alg_);
  if (window_ < 0 || window_ > hochschild::kMaxWeight)
    throw WindowError("window must lie in 0.." + std::to_string(hochschild::kMaxWeight), window_);
}

void CochainComplex::check(int weight) const {
  if (weight < 0) throw std::invalid_argument("negative weight");
  if (weight > window_)
    throw WindowError("weight " + std::to_string(weight) + " outside window " + std::to_string(window_), weight);
}

const Ambient& CochainComplex::ambient(int weight) const {
  check(weight);
  auto& slot = ambient_[weight];
  if (!slot) slot = std::make_unique<Ambient>(*alg_, weight);
  return *slot;
}

const SparseMatrix& CochainComplex::hoch(int weight) const {
  check(weight + 1);
  auto it = hoch_.find(weight);
  if (it != hoch_.end()) return it->second;
  const Ambient& src = ambient(weight);
  const Ambient& dst = ambient(weight + 1);
  std::vector<SparseVector> cols;
  cols.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    cols.push_back(dst.coords(hochschild::hoch_diff(src.cochain(alg_, {{i, Scalar(1)}}))));
  return hoch_.emplace(weight, SparseMatrix::from_columns(dst.size(), std::move(cols))).first->second;
}

const SparseMatrix& CochainComplex::connes(int weight) const {
  check(weight);
  auto it = connes_.find(weight);
  if (it != connes_.end()) return it->second;
  const Ambient& src = ambient(weight);
  if (weight == 0) return connes_.emplace(0, SparseMatrix(0, src.size())).first->second;
  const Ambient& dst = ambient(weight - 1);
  std::vector<SparseVector> cols;
  cols.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    cols.push_back(dst.coords(hochschild::delta(src.cochain(alg_, {{i, Scalar(1)}}))));
  return connes_.emplace(weight, SparseMatrix::from_columns(dst.size(), std::move(cols))).first->second;
}

std::vector<SparseVector> CochainComplex::basis(int weight, int parity, Variant v, bool cyclic) const {
  const Ambient& amb = ambient(weight);
  std::vector<SparseVector> out;
  auto take = [&](const std::vector<Cochain>& cs) {
    for (const auto& c : cs)
      if (!c.is_zero() && c.parity() == parity) out.push_back(amb.coords(c));
  };
  if (cyclic) {
    take(hochschild::cyclic_basis(alg_, weight, v == Variant::strict));
  } else if (weight == 0 && v == Variant::strict) {
    take(hochschild::strict_weight0_basis(alg_));
  } else {
    for (std::size_t i = 0; i < amb.size(); ++i)
      if (amb.parity(i) == parity) out.push_back({{i, Scalar(1)}});
  }
  return out;
}

}  // namespace ncbtt::homology
