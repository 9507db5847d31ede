#include "ncbtt/algebra/validate.hpp"

#include "ncbtt/exactla/elimination.hpp"

namespace ncbtt::algebra {

namespace {

// Iterate over all words of the given length over {0..dim-1}.
template <class F>
bool for_each_word(std::size_t length, std::size_t dim, F&& f) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= dim;
  for (std::size_t idx = 0; idx < total; ++idx)
    if (!f(word_from_index(idx, length, dim))) return false;
  return true;
}

Check parity_check(const Algebra& a) {
  Check c{"parity", true, {}};
  for (int k : a.arities())
    for (const auto& t : a.terms(k)) {
      int p = k;
      for (int i : t.inputs) p += a.parity(i);
      if ((p & 1) != a.parity(t.output)) {
        c.pass = false;
        c.witness = "m" + std::to_string(k) + a.describe(t.inputs);
        return c;
      }
    }
  return c;
}

Check unit_check(const Algebra& a) {
  Check c{"strict_unitality", true, {}};
  const int u = static_cast<int>(a.unit());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int x = static_cast<int>(i);
    SparseVector expect{{i, Scalar(1)}};
    if (a.product(2, {u, x}) != expect || a.product(2, {x, u}) != expect) {
      c.pass = false;
      c.witness = "m2" + a.describe({u, x});
      return c;
    }
  }
  for (int k : a.arities()) {
    if (k == 2) continue;
    for (const auto& t : a.terms(k))
      for (int i : t.inputs)
        if (i == u) {
          c.pass = false;
          c.witness = "m" + std::to_string(k) + a.describe(t.inputs);
          return c;
        }
  }
  return c;
}

// sum over i + j = n + 1 of b_i(id^r, b_j, id^s) on the word, in the suspension.
std::vector<Scalar> stasheff(const Algebra& a, const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<Scalar> out(a.dim());
  auto shifted_product = [&](int k, const std::vector<int>& w) {
    SparseVector r = a.product(k, w);
    int e = 0;
    for (int i = 0; i < k; ++i) e += (k - 1 - i) * a.parity(w[i]);
    if (e & 1)
      for (auto& [o, s] : r) s = -s;
    return r;
  };
  for (int j = 1; j <= n; ++j) {
    int i = n + 1 - j;
    for (int r = 0; r + j <= n; ++r) {
      std::vector<int> inner(word.begin() + r, word.begin() + r + j);
      SparseVector mid = shifted_product(j, inner);
      if (mid.empty()) continue;
      int sign = 0;
      for (int l = 0; l < r; ++l) sign += a.shifted(word[l]);
      for (const auto& [o, s] : mid) {
        std::vector<int> outer(word.begin(), word.begin() + r);
        outer.push_back(static_cast<int>(o));
        outer.insert(outer.end(), word.begin() + r + j, word.end());
        Scalar coef = (sign & 1) ? -s : s;
        for (const auto& [o2, s2] : shifted_product(i, outer)) out[o2] += coef * s2;
      }
    }
  }
  return out;
}

Check ainfty_check(const Algebra& a, int n) {
  Check c{"ainfty_arity_" + std::to_string(n), true, {}};
  for_each_word(static_cast<std::size_t>(n), a.dim(), [&](const std::vector<int>& w) {
    for (const auto& s : stasheff(a, w))
      if (!s.is_zero()) {
        c.pass = false;
        c.witness = a.describe(w);
        return false;
      }
    return true;
  });
  return c;
}

Check nondegenerate_check(const Algebra& a) {
  Check c{"pairing_nondegenerate", true, {}};
  std::vector<SparseVector> cols(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!a.pair(i, j).is_zero()) cols[j].emplace_back(i, a.pair(i, j));
  auto m = exactla::SparseMatrix::from_columns(a.dim(), cols);
  auto ker = exactla::nullspace(m, a.field());
  if (ker.empty()) return c;
  c.pass = false;
  std::string w;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (ker[0][i].is_zero()) continue;
    if (!w.empty()) w += " + ";
    w += ker[0][i].str() + "*" + a.basis(i).name;
  }
  c.witness = w;
  return c;
}

Check symmetry_check(const Algebra& a) {
  Check c{"pairing_graded_symmetric", true, {}};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Scalar rhs = a.pair(j, i);
      if (a.parity(i) & a.parity(j)) rhs = -rhs;
      if (!(a.pair(i, j) == rhs)) {
        c.pass = false;
        c.witness = a.describe({static_cast<int>(i), static_cast<int>(j)});
        return c;
      }
    }
  return c;
}

Check pairing_parity_check(const Algebra& a) {
  Check c{"pairing_parity", true, {}};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a.pair(i, j).is_zero() && ((a.parity(i) + a.parity(j)) & 1) != a.pairing_parity()) {
        c.pass = false;
        c.witness = a.describe({static_cast<int>(i), static_cast<int>(j)});
        return c;
      }
  return c;
}

Scalar pair_vec(const Algebra& a, const SparseVector& v, std::size_t b) {
  Scalar s;
  for (const auto& [i, x] : v) s += x * a.pair(i, b);
  return s;
}

// <m_k(a1..ak), a0> = (-1)^{k + |a0|(|a1|+...+|ak|)} <m_k(a0..a_{k-1}), ak>
Check cyclic_check(const Algebra& a, int k) {
  Check c{"cyclicity_m" + std::to_string(k), true, {}};
  for_each_word(static_cast<std::size_t>(k + 1), a.dim(), [&](const std::vector<int>& w) {
    std::vector<int> tail(w.begin() + 1, w.end()), head(w.begin(), w.end() - 1);
    int deg = 0;
    for (std::size_t i = 1; i < w.size(); ++i) deg += a.parity(w[i]);
    int sign = k + a.parity(w[0]) * deg;
    Scalar lhs = pair_vec(a, a.product(k, tail), w[0]);
    Scalar rhs = pair_vec(a, a.product(k, head), w.back());
    if (sign & 1) rhs = -rhs;
    if (!(lhs == rhs)) {
      c.pass = false;
      c.witness = a.describe(w);
      return false;
    }
    return true;
  });
  return c;
}

}  // namespace

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(const Algebra& a, int arity_bound) {
  ValidationReport r;
  r.algebra = a.name();
  r.arity_bound = arity_bound;
  r.checks.push_back(parity_check(a));
  r.checks.push_back(unit_check(a));
  for (int n = 1; n <= arity_bound; ++n) r.checks.push_back(ainfty_check(a, n));
  r.checks.push_back(nondegenerate_check(a));
  r.checks.push_back(symmetry_check(a));
  r.checks.push_back(pairing_parity_check(a));
  for (int k : a.arities())
    if (k <= arity_bound) r.checks.push_back(cyclic_check(a, k));
  return r;
}

}  // namespace ncbtt::algebra
