#include "ncbtt/hochschild/cyclic.hpp"

#include <map>
#include <stdexcept>

#include "ncbtt/hochschild/operators.hpp"

namespace ncbtt::hochschild {

namespace {

int rot_sign(const Algebra& a, const std::vector<int>& w) {
  int head = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) head += a.shifted(static_cast<std::size_t>(w[i]));
  return (a.shifted(static_cast<std::size_t>(w.back())) * head) & 1;
}

std::vector<int> rotate(const std::vector<int>& w) {
  std::vector<int> r{w.back()};
  r.insert(r.end(), w.begin(), w.end() - 1);
  return r;
}

bool has_reduced_unit(const Algebra& a, const std::vector<int>& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (static_cast<std::size_t>(w[i]) == a.unit()) return true;
  return false;
}

Scalar value_at(const Algebra& a, const Functional& f, const std::vector<int>& w) {
  if (has_reduced_unit(a, w)) return Scalar(0);
  return f.coefficient(w);
}

std::vector<std::vector<int>> chain_words(const Algebra& a, int weight) {
  std::vector<std::vector<int>> out;
  for (const auto& x : reduced_words(a, weight))
    for (std::size_t a0 = 0; a0 < a.dim(); ++a0) out.push_back(chain_letters(static_cast<int>(a0), x));
  return out;
}

}  // namespace

bool is_cyclic(const Cochain& phi) {
  const Algebra& a = phi.algebra();
  Functional f = functional_of(phi);
  for (int w : phi.weights()) {
    if (w == 0) continue;
    for (const auto& word : chain_words(a, w)) {
      Scalar lhs = value_at(a, f, word);
      Scalar rhs = value_at(a, f, rotate(word));
      if (rot_sign(a, word)) rhs = -rhs;
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

Cochain cyclic_project(const Cochain& phi) {
  const Algebra& a = phi.algebra();
  Cochain out(phi.algebra_ptr());
  for (int w : phi.weights()) {
    Cochain comp = phi.component(w);
    if (w == 0) {
      out += comp;
      continue;
    }
    if (!a.field().is_rational() && (w + 1) % static_cast<int>(a.field().characteristic) == 0)
      throw std::domain_error("cyclic averaging needs n+1 invertible in the field");
    Functional f = functional_of(comp);
    Functional g(phi.algebra_ptr());
    for (const auto& word : chain_words(a, w)) {
      if (static_cast<std::size_t>(word[0]) == a.unit()) continue;
      Scalar total;
      std::vector<int> cur = word;
      bool neg = false;
      for (int j = 0; j <= w; ++j) {
        Scalar v = value_at(a, f, cur);
        total += neg ? -v : v;
        if (rot_sign(a, cur)) neg = !neg;
        cur = rotate(cur);
      }
      g.add(word, total / Scalar(w + 1));
    }
    out += cochain_of(g);
  }
  return out;
}

CyclicCochain::CyclicCochain(Cochain phi) : phi_(std::move(phi)) {
  if (!is_cyclic(phi_)) throw std::invalid_argument("cochain is not cyclic");
}

std::vector<Cochain> strict_weight0_basis(const AlgebraPtr& a) {
  std::vector<Cochain> out;
  for (std::size_t a0 = 0; a0 < a->dim(); ++a0) {
    if (a0 == a->unit()) continue;
    Functional f(a);
    f.add({static_cast<int>(a0)}, Scalar(1));
    out.push_back(cochain_of(f));
  }
  return out;
}

std::vector<Cochain> cyclic_basis(const AlgebraPtr& a, int weight, bool strict) {
  std::vector<Cochain> out;
  if (weight == 0) {
    if (strict) return strict_weight0_basis(a);
    for (std::size_t i = 0; i < a->dim(); ++i) out.push_back(basis_cochain(a, {}, static_cast<int>(i)));
    return out;
  }
  std::map<std::vector<int>, bool> done;
  for (const auto& word : reduced_words(*a, weight + 1)) {
    if (done.count(word)) continue;
    std::map<std::vector<int>, int> sign;  // 0 means +1, 1 means -1
    std::vector<int> cur = word;
    int s = 0;
    bool killed = false;
    for (int j = 0; j <= weight; ++j) {
      auto it = sign.find(cur);
      if (it != sign.end()) {
        if (it->second != s) killed = true;
      } else {
        sign[cur] = s;
      }
      s ^= rot_sign(*a, cur);
      cur = rotate(cur);
    }
    if (s != 0) killed = true;
    for (const auto& [w, _] : sign) done[w] = true;
    if (killed) continue;
    Functional f(a);
    for (const auto& [w, sg] : sign) f.add(w, sg ? Scalar(-1) : Scalar(1));
    out.push_back(cochain_of(f));
  }
  return out;
}

}  // namespace ncbtt::hochschild
