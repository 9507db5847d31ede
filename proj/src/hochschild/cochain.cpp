#include "ncbtt/hochschild/tensor.hpp"

#include <string>
#include <type_traits>

namespace ncbtt::hochschild {

namespace {

std::uint64_t key_limit(std::size_t dim, int weight) {
  std::uint64_t n = 1;
  for (int i = 0; i <= weight; ++i) {
    if (n > (std::uint64_t{1} << 56) / dim) throw WeightError("word index overflow");
    n *= dim;
  }
  return n;
}

}  // namespace

template <class Tag>
void Tensor<Tag>::add(const std::vector<int>& letters, const Scalar& c) {
  if (letters.empty()) throw std::invalid_argument("empty letter word");
  const int w = static_cast<int>(letters.size()) - 1;
  const int unit = static_cast<int>(alg_->unit());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 0 || static_cast<std::size_t>(letters[i]) >= alg_->dim())
      throw std::out_of_range("basis letter out of range");
    bool value_slot = std::is_same_v<Tag, CochainTag> ? i + 1 == letters.size() : i == 0;
    if (!value_slot && letters[i] == unit) throw std::invalid_argument("unit in a reduced slot");
  }
  add_key(w, algebra::word_index(letters, alg_->dim()), c);
}

template <class Tag>
void Tensor<Tag>::add_key(int weight, std::uint64_t key, const Scalar& c) {
  if (c.is_zero()) return;
  if (weight > kMaxWeight)
    throw WeightError("weight " + std::to_string(weight) + " exceeds the maximum " +
                      std::to_string(kMaxWeight));
  key_limit(alg_->dim(), weight);
  auto& table = parts_[weight];
  auto [it, fresh] = table.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) table.erase(it);
  }
  if (table.empty()) parts_.erase(weight);
}

template <class Tag>
Scalar Tensor<Tag>::coefficient(const std::vector<int>& letters) const {
  auto it = parts_.find(static_cast<int>(letters.size()) - 1);
  if (it == parts_.end()) return Scalar(0);
  auto jt = it->second.find(algebra::word_index(letters, alg_->dim()));
  return jt == it->second.end() ? Scalar(0) : jt->second;
}

template <class Tag>
std::size_t Tensor<Tag>::size() const {
  std::size_t n = 0;
  for (const auto& [w, t] : parts_) n += t.size();
  return n;
}

template <class Tag>
std::vector<int> Tensor<Tag>::weights() const {
  std::vector<int> out;
  for (const auto& [w, t] : parts_) out.push_back(w);
  return out;
}

template <class Tag>
Tensor<Tag> Tensor<Tag>::component(int weight) const {
  Tensor t(alg_);
  auto it = parts_.find(weight);
  if (it != parts_.end()) t.parts_[weight] = it->second;
  return t;
}

template <class Tag>
int Tensor<Tag>::letters_parity(const std::vector<int>& letters) const {
  int p = 0;
  for (int l : letters) p += alg_->shifted(static_cast<std::size_t>(l));
  return p & 1;
}

template <class Tag>
Tensor<Tag> Tensor<Tag>::parity_part(int parity) const {
  Tensor t(alg_);
  for_each([&](int w, const std::vector<int>& letters, const Scalar& c) {
    if (letters_parity(letters) == (parity & 1))
      t.add_key(w, algebra::word_index(letters, alg_->dim()), c);
  });
  return t;
}

template <class Tag>
bool Tensor<Tag>::is_homogeneous() const {
  int seen = -1;
  bool ok = true;
  for_each([&](int, const std::vector<int>& letters, const Scalar&) {
    int p = letters_parity(letters);
    if (seen >= 0 && p != seen) ok = false;
    seen = p;
  });
  return ok;
}

template <class Tag>
int Tensor<Tag>::parity() const {
  if (!is_homogeneous()) throw std::logic_error("tensor is not parity-homogeneous");
  int p = 0;
  if (!parts_.empty()) {
    const auto& [w, table] = *parts_.begin();
    p = letters_parity(algebra::word_from_index(table.begin()->first,
                                                static_cast<std::size_t>(w) + 1, alg_->dim()));
  }
  return p;
}

template <class Tag>
void Tensor<Tag>::check_same(const Tensor& o) const {
  if (alg_ != o.alg_) throw AlgebraMismatch();
}

template <class Tag>
Tensor<Tag>& Tensor<Tag>::operator+=(const Tensor& o) {
  check_same(o);
  for (const auto& [w, table] : o.parts_)
    for (const auto& [k, c] : table) add_key(w, k, c);
  return *this;
}

template <class Tag>
Tensor<Tag>& Tensor<Tag>::operator-=(const Tensor& o) {
  check_same(o);
  for (const auto& [w, table] : o.parts_)
    for (const auto& [k, c] : table) add_key(w, k, -c);
  return *this;
}

template <class Tag>
Tensor<Tag>& Tensor<Tag>::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [w, table] : parts_)
    for (auto& [k, c] : table) c *= s;
  return *this;
}

template class Tensor<CochainTag>;
template class Tensor<ChainTag>;
template class Tensor<FunctionalTag>;

std::vector<int> cochain_letters(const std::vector<int>& inputs, int out) {
  std::vector<int> l = inputs;
  l.push_back(out);
  return l;
}

std::vector<int> chain_letters(int a0, const std::vector<int>& word) {
  std::vector<int> l{a0};
  l.insert(l.end(), word.begin(), word.end());
  return l;
}

Cochain basis_cochain(const AlgebraPtr& a, const std::vector<int>& inputs, int out,
                      const Scalar& c) {
  Cochain t(a);
  t.add(cochain_letters(inputs, out), c);
  return t;
}

Cochain element_cochain(const AlgebraPtr& a, const std::vector<Scalar>& value) {
  Cochain t(a);
  for (std::size_t i = 0; i < value.size(); ++i) t.add({static_cast<int>(i)}, value[i]);
  return t;
}

Chain basis_chain(const AlgebraPtr& a, int a0, const std::vector<int>& word, const Scalar& c) {
  Chain t(a);
  t.add(chain_letters(a0, word), c);
  return t;
}

std::vector<Scalar> evaluate(const Cochain& phi, const std::vector<int>& word) {
  const Algebra& a = phi.algebra();
  std::vector<Scalar> out(a.dim());
  for (std::size_t o = 0; o < a.dim(); ++o)
    out[o] = phi.coefficient(cochain_letters(word, static_cast<int>(o)));
  return out;
}

std::vector<std::vector<int>> reduced_words(const Algebra& a, int length) {
  std::vector<int> bar;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != a.unit()) bar.push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  if (bar.empty()) {
    if (length == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(length), 0);
  while (true) {
    std::vector<int> w(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) w[i] = bar[idx[i]];
    out.push_back(std::move(w));
    int pos = length - 1;
    while (pos >= 0 && ++idx[pos] == bar.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace ncbtt::hochschild
