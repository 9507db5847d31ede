#pragma once

// Brute-force insertion sums: every output word, every placement, every
// multilinear expansion. Slow and independent of the push-based engine.

#include <functional>
#include <vector>

#include "ncbtt/hochschild/tensor.hpp"

namespace oracle {

using ncbtt::exactla::Scalar;
using ncbtt::hochschild::Cochain;

inline int sdeg(const ncbtt::algebra::Algebra& a, int i) { return a.shifted(static_cast<std::size_t>(i)); }

inline int cochain_parity(const Cochain& c) { return c.parity(); }

// phi{args} with phi either a cochain or (full=true) the shifted arity-2 structure on all of A.
inline Cochain insertion_sum(const ncbtt::algebra::AlgebraPtr& a, const Cochain* phi,
                             const std::vector<Cochain>& args) {
  using ncbtt::hochschild::cochain_letters;
  using ncbtt::hochschild::evaluate;
  using ncbtt::hochschild::reduced_words;
  const bool full = phi == nullptr;
  const std::size_t k = args.size();
  std::vector<int> phi_weights = full ? std::vector<int>{2} : phi->weights();
  std::vector<std::vector<int>> arg_weights;
  for (const auto& c : args) arg_weights.push_back(c.weights());
  std::vector<int> arg_par;
  for (const auto& c : args) arg_par.push_back(c.parity());
  Cochain out(a);
  auto eval_outer = [&](const std::vector<int>& idx) {
    std::vector<Scalar> v(a->dim());
    if (full) {
      int sign = a->parity(static_cast<std::size_t>(idx[0]));
      for (const auto& [o, s] : a->product(2, idx)) v[o] = sign ? -s : s;
    } else {
      for (int i : idx)
        if (static_cast<std::size_t>(i) == a->unit()) return v;
      v = evaluate(*phi, idx);
    }
    return v;
  };
  std::function<void(std::size_t, std::vector<int>&)> over_weights;
  std::vector<int> wa(k);
  over_weights = [&](std::size_t j, std::vector<int>& chosen) {
    if (j < k) {
      for (int w : arg_weights[j]) {
        chosen[j] = w;
        over_weights(j + 1, chosen);
      }
      return;
    }
    for (int wp : phi_weights) {
      if (wp < static_cast<int>(k)) continue;
      int total = wp - static_cast<int>(k);
      for (int w : chosen) total += w;
      for (const auto& xs : reduced_words(*a, total)) {
        // placements: increasing k-subsets of phi slots
        std::vector<int> pos(k);
        std::function<void(std::size_t, int)> place = [&](std::size_t j2, int from) {
          if (j2 < k) {
            for (int p = from; p < wp; ++p) {
              pos[j2] = p;
              place(j2 + 1, p + 1);
            }
            return;
          }
          std::vector<std::vector<Scalar>> slots;
          int sign = 0;
          std::size_t xi = 0, ai = 0;
          for (int slot = 0; slot < wp; ++slot) {
            if (ai < k && pos[ai] == slot) {
              std::vector<int> sub(xs.begin() + static_cast<long>(xi),
                                   xs.begin() + static_cast<long>(xi) + chosen[ai]);
              int pre = 0;
              for (std::size_t t = 0; t < xi; ++t) pre += sdeg(*a, xs[t]);
              sign += arg_par[ai] * pre;
              auto v = evaluate(args[ai].component(chosen[ai]), sub);
              if (!full) v[a->unit()] = Scalar(0);
              slots.push_back(v);
              xi += static_cast<std::size_t>(chosen[ai]);
              ++ai;
            } else {
              std::vector<Scalar> v(a->dim());
              v[static_cast<std::size_t>(xs[xi])] = Scalar(1);
              slots.push_back(v);
              ++xi;
            }
          }
          std::vector<int> idx(slots.size());
          std::function<void(std::size_t, Scalar)> expand = [&](std::size_t s, Scalar coef) {
            if (s == slots.size()) {
              auto v = eval_outer(idx);
              for (std::size_t o = 0; o < v.size(); ++o)
                if (!v[o].is_zero())
                  out.add(cochain_letters(xs, static_cast<int>(o)), (sign & 1) ? -(coef * v[o]) : coef * v[o]);
              return;
            }
            for (std::size_t b = 0; b < slots[s].size(); ++b) {
              if (slots[s][b].is_zero()) continue;
              idx[s] = static_cast<int>(b);
              expand(s + 1, coef * slots[s][b]);
            }
          };
          expand(0, Scalar(1));
        };
        place(0, 0);
      }
    }
  };
  over_weights(0, wa);
  return out;
}

}  // namespace oracle
