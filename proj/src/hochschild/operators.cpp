#include "ncbtt/hochschild/operators.hpp"

#include <map>

#include "ncbtt/exactla/elimination.hpp"

namespace ncbtt::hochschild {

namespace {

struct Entry {
  std::vector<int> word;
  int out = 0;
  Scalar coef;
  int parity = 0;  // shifted degree of the entry as an operation
};

int word_degree(const Algebra& a, const std::vector<int>& w, std::size_t from, std::size_t to) {
  int d = 0;
  for (std::size_t i = from; i < to; ++i) d += a.shifted(static_cast<std::size_t>(w[i]));
  return d & 1;
}

std::vector<Entry> entries_of(const Cochain& c) {
  std::vector<Entry> out;
  const Algebra& a = c.algebra();
  c.for_each([&](int w, const std::vector<int>& letters, const Scalar& s) {
    Entry e;
    e.word.assign(letters.begin(), letters.begin() + w);
    e.out = letters.back();
    e.coef = s;
    e.parity = c.letters_parity(letters);
    out.push_back(std::move(e));
  });
  (void)a;
  return out;
}

std::vector<Entry> structure_entries(const Algebra& a) {
  std::vector<Entry> out;
  for (int k : a.arities())
    for (auto& t : a.shifted_terms(k)) {
      Entry e;
      e.word = t.inputs;
      e.out = t.output;
      e.coef = t.coef;
      e.parity = 1;
      out.push_back(std::move(e));
    }
  return out;
}

class BraceEngine {
 public:
  BraceEngine(const Algebra& a, bool outer_full, const std::vector<std::vector<Entry>>& inners,
              Cochain& result)
      : a_(a), full_(outer_full), result_(result), k_(inners.size()), by_out_(inners.size()) {
    for (std::size_t j = 0; j < k_; ++j)
      for (const auto& e : inners[j]) by_out_[j][e.out].push_back(&e);
  }

  void run(const std::vector<Entry>& outer) {
    for (const auto& e : outer) {
      if (e.word.size() < k_) continue;
      outer_ = &e;
      word_.clear();
      dfs(0, 0, e.coef, 0, 0);
    }
  }

 private:
  void dfs(std::size_t pos, std::size_t j, const Scalar& coef, int sign, int deg) {
    const auto& z = outer_->word;
    const std::size_t n = z.size();
    if (pos == n) {
      if (j != k_) return;
      std::vector<int> letters = word_;
      letters.push_back(outer_->out);
      Scalar c = (sign & 1) ? -coef : coef;
      result_.add_key(static_cast<int>(word_.size()),
                      algebra::word_index(letters, a_.dim()), c);
      return;
    }
    if (n - pos > k_ - j) {
      int letter = z[pos];
      if (!(full_ && static_cast<std::size_t>(letter) == a_.unit())) {
        word_.push_back(letter);
        dfs(pos + 1, j, coef, sign, deg + a_.shifted(static_cast<std::size_t>(letter)));
        word_.pop_back();
      }
    }
    if (j < k_) {
      auto it = by_out_[j].find(z[pos]);
      if (it == by_out_[j].end()) return;
      for (const Entry* f : it->second) {
        std::size_t mark = word_.size();
        word_.insert(word_.end(), f->word.begin(), f->word.end());
        int d = deg + word_degree(a_, f->word, 0, f->word.size());
        dfs(pos + 1, j + 1, coef * f->coef, sign + f->parity * (deg & 1), d);
        word_.resize(mark);
      }
    }
  }

  const Algebra& a_;
  bool full_;
  Cochain& result_;
  std::size_t k_;
  std::vector<std::map<int, std::vector<const Entry*>>> by_out_;
  const Entry* outer_ = nullptr;
  std::vector<int> word_;
};

void check_algebra(const AlgebraPtr& a, const std::vector<Cochain>& cs) {
  for (const auto& c : cs)
    if (c.algebra_ptr() != a) throw AlgebraMismatch();
}

// Inverse of the Gram matrix G[a0][o] = (-1)^{|s a0| par} omega(o, a0).
std::vector<std::vector<Scalar>> gram_inverse(const Algebra& a, int par) {
  const std::size_t n = a.dim();
  std::vector<exactla::SparseVector> cols(n);
  for (std::size_t o = 0; o < n; ++o)
    for (std::size_t a0 = 0; a0 < n; ++a0) {
      Scalar w = a.pair(o, a0);
      if (a.parity(o)) w = -w;
      if (a.shifted(a0) & par) w = -w;
      if (!w.is_zero()) cols[o].emplace_back(a0, w);
    }
  auto m = exactla::SparseMatrix::from_columns(n, cols);
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> e(n);
    e[j] = Scalar(1);
    auto x = exactla::solve(m, e);
    if (!x) throw std::domain_error("pairing is degenerate");
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*x)[i];
  }
  return inv;
}

}  // namespace

Cochain brace(const Cochain& phi, const std::vector<Cochain>& args) {
  check_algebra(phi.algebra_ptr(), args);
  Cochain result(phi.algebra_ptr());
  std::vector<std::vector<Entry>> inners;
  for (const auto& a : args) inners.push_back(entries_of(a));
  BraceEngine eng(phi.algebra(), false, inners, result);
  eng.run(entries_of(phi));
  return result;
}

Cochain structure_cochain(const AlgebraPtr& a) {
  Cochain m(a);
  for (const auto& e : structure_entries(*a)) {
    bool reduced = true;
    for (int l : e.word) reduced = reduced && static_cast<std::size_t>(l) != a->unit();
    if (reduced) m.add(cochain_letters(e.word, e.out), e.coef);
  }
  return m;
}

Cochain m_brace(const AlgebraPtr& a, const std::vector<Cochain>& args) {
  check_algebra(a, args);
  Cochain result(a);
  std::vector<std::vector<Entry>> inners;
  for (const auto& c : args) inners.push_back(entries_of(c));
  BraceEngine eng(*a, true, inners, result);
  eng.run(structure_entries(*a));
  return result;
}

Cochain cup(const Cochain& phi, const Cochain& psi) {
  const AlgebraPtr& a = phi.algebra_ptr();
  Cochain out(a);
  for (int p : phi.weights())
    for (int pp = 0; pp < 2; ++pp) {
      Cochain x = phi.component(p).parity_part(pp);
      if (x.is_zero()) continue;
      for (int q : psi.weights()) {
        Cochain y = psi.component(q);
        Cochain t = m_brace(a, {x, y});
        if (((pp + 1) + p * q) & 1) t *= Scalar(-1);
        out += t;
      }
    }
  return out;
}

Cochain brace_product(const Cochain& phi, const Cochain& psi) {
  const AlgebraPtr& a = phi.algebra_ptr();
  Cochain out(a);
  for (int pp = 0; pp < 2; ++pp) {
    Cochain x = phi.parity_part(pp);
    if (x.is_zero()) continue;
    Cochain t = m_brace(a, {x, psi});
    if ((pp + 1) & 1) t *= Scalar(-1);
    out += t;
  }
  return out;
}

Cochain gerstenhaber(const Cochain& phi, const Cochain& psi) {
  Cochain out(phi.algebra_ptr());
  for (int p = 0; p < 2; ++p) {
    Cochain x = phi.parity_part(p);
    if (x.is_zero()) continue;
    for (int q = 0; q < 2; ++q) {
      Cochain y = psi.parity_part(q);
      if (y.is_zero()) continue;
      out += brace(x, {y});
      Cochain t = brace(y, {x});
      if (p * q) t *= Scalar(-1);
      out -= t;
    }
  }
  return out;
}

Cochain hoch_diff(const Cochain& phi) {
  const AlgebraPtr& a = phi.algebra_ptr();
  Cochain out = m_brace(a, {phi});
  Cochain m = structure_cochain(a);
  for (int p = 0; p < 2; ++p) {
    Cochain x = phi.parity_part(p);
    if (x.is_zero()) continue;
    Cochain t = brace(x, {m});
    if (p) t *= Scalar(-1);
    out -= t;
  }
  return out;
}

Chain hoch_boundary(const Chain& c) {
  const Algebra& a = c.algebra();
  Chain out(c.algebra_ptr());
  const int unit = static_cast<int>(a.unit());
  auto shifted_product = [&](int k, const std::vector<int>& w) {
    exactla::SparseVector r = a.product(k, w);
    int e = 0;
    for (int i = 0; i < k; ++i) e += (k - 1 - i) * a.parity(static_cast<std::size_t>(w[i]));
    if (e & 1)
      for (auto& [o, s] : r) s = -s;
    return r;
  };
  c.for_each([&](int, const std::vector<int>& u, const Scalar& coef) {
    const int len = static_cast<int>(u.size());
    for (int k : a.arities()) {
      if (k > len) continue;
      // windows away from the zeroth slot
      for (int i = 1; i + k <= len; ++i) {
        std::vector<int> win(u.begin() + i, u.begin() + i + k);
        int sign = word_degree(a, u, 0, static_cast<std::size_t>(i));
        for (const auto& [o, s] : shifted_product(k, win)) {
          if (static_cast<int>(o) == unit) continue;
          std::vector<int> nw(u.begin(), u.begin() + i);
          nw.push_back(static_cast<int>(o));
          nw.insert(nw.end(), u.begin() + i + k, u.end());
          out.add(nw, sign ? -(coef * s) : coef * s);
        }
      }
      // windows through the zeroth slot, with j letters wrapped from the end
      for (int j = 0; j < k; ++j) {
        std::vector<int> win(u.end() - j, u.end());
        win.insert(win.end(), u.begin(), u.begin() + (k - j));
        int sign = word_degree(a, u, static_cast<std::size_t>(len - j), static_cast<std::size_t>(len)) *
                   word_degree(a, u, 0, static_cast<std::size_t>(len - j));
        for (const auto& [o, s] : shifted_product(k, win)) {
          std::vector<int> nw{static_cast<int>(o)};
          nw.insert(nw.end(), u.begin() + (k - j), u.end() - j);
          out.add(nw, sign ? -(coef * s) : coef * s);
        }
      }
    }
  });
  return out;
}

Chain connes_B(const Chain& c) {
  const Algebra& a = c.algebra();
  Chain out(c.algebra_ptr());
  const int unit = static_cast<int>(a.unit());
  c.for_each([&](int, const std::vector<int>& u, const Scalar& coef) {
    if (u[0] == unit) return;
    const std::size_t len = u.size();
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<int> nw{unit};
      nw.insert(nw.end(), u.begin() + static_cast<long>(i), u.end());
      nw.insert(nw.end(), u.begin(), u.begin() + static_cast<long>(i));
      int sign = word_degree(a, u, i, len) * word_degree(a, u, 0, i);
      out.add(nw, sign ? -coef : coef);
    }
  });
  return out;
}

Functional functional_of(const Cochain& phi) {
  const Algebra& a = phi.algebra();
  Functional f(phi.algebra_ptr());
  phi.for_each([&](int w, const std::vector<int>& letters, const Scalar& c) {
    const int o = letters.back();
    std::vector<int> x(letters.begin(), letters.begin() + w);
    int dx = word_degree(a, x, 0, x.size());
    for (std::size_t a0 = 0; a0 < a.dim(); ++a0) {
      Scalar p = a.pair(static_cast<std::size_t>(o), a0);
      if (p.is_zero()) continue;
      if (a.parity(static_cast<std::size_t>(o))) p = -p;
      if (a.shifted(a0) & dx) p = -p;
      f.add(chain_letters(static_cast<int>(a0), x), c * p);
    }
  });
  return f;
}

Cochain cochain_of(const Functional& f) {
  const Algebra& a = f.algebra();
  const std::size_t n = a.dim();
  std::map<std::pair<int, std::vector<int>>, std::vector<Scalar>> grouped;
  f.for_each([&](int w, const std::vector<int>& letters, const Scalar& c) {
    std::vector<int> x(letters.begin() + 1, letters.end());
    auto& v = grouped[{w, x}];
    if (v.empty()) v.resize(n);
    v[static_cast<std::size_t>(letters[0])] += c;
  });
  Cochain out(f.algebra_ptr());
  if (grouped.empty()) return out;
  const auto inv0 = gram_inverse(a, 0);
  const auto inv1 = gram_inverse(a, 1);
  for (const auto& [key, v] : grouped) {
    const auto& x = key.second;
    const auto& inv = word_degree(a, x, 0, x.size()) ? inv1 : inv0;
    for (std::size_t o = 0; o < n; ++o) {
      Scalar s;
      for (std::size_t j = 0; j < n; ++j)
        if (!v[j].is_zero() && !inv[o][j].is_zero()) s += inv[o][j] * v[j];
      if (!s.is_zero()) out.add(cochain_letters(x, static_cast<int>(o)), s);
    }
  }
  return out;
}

Functional pull_back_B(const Functional& f) {
  const Algebra& a = f.algebra();
  const int unit = static_cast<int>(a.unit());
  Functional g(f.algebra_ptr());
  f.for_each([&](int w, const std::vector<int>& letters, const Scalar& c) {
    if (letters[0] != unit || w == 0) return;
    std::vector<int> z(letters.begin() + 1, letters.end());
    const std::size_t len = z.size();
    for (std::size_t j = 0; j < len; ++j) {
      std::vector<int> u(z.begin() + static_cast<long>(j), z.end());
      u.insert(u.end(), z.begin(), z.begin() + static_cast<long>(j));
      int sign = word_degree(a, z, 0, j) * word_degree(a, z, j, len);
      g.add(u, sign ? -c : c);
    }
  });
  return g;
}

Scalar chain_cochain_pairing(const Cochain& phi, const Chain& c) {
  if (phi.algebra_ptr() != c.algebra_ptr()) throw AlgebraMismatch();
  Functional f = functional_of(phi);
  Scalar s;
  c.for_each([&](int, const std::vector<int>& letters, const Scalar& x) {
    Scalar v = f.coefficient(letters);
    if (!v.is_zero()) s += x * v;
  });
  return s;
}

Cochain delta(const Cochain& phi) { return cochain_of(pull_back_B(functional_of(phi))); }

}  // namespace ncbtt::hochschild
