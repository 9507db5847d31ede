#include "ncbtt/trees/action.hpp"

#include <functional>

#include "ncbtt/hochschild/operators.hpp"
#include "ncbtt/trees/enumerate.hpp"

namespace ncbtt::trees {

using exactla::Scalar;
using hochschild::Functional;

bool supported(const RibbonTree& t) {
  for (const auto& x : t.vertices())
    if (x.white && x.start == Start::child) return false;
  return true;
}

namespace {

struct Part {
  int weight;
  int parity;
  Cochain c;
};

std::vector<Part> parts_of(const Cochain& c) {
  std::vector<Part> out;
  for (int w : c.weights())
    for (int p = 0; p < 2; ++p) {
      Cochain x = c.component(w).parity_part(p);
      if (!x.is_zero()) out.push_back({w, p, std::move(x)});
    }
  return out;
}

std::vector<Scalar> value(const Cochain& phi, const std::vector<int>& word) {
  const auto& a = phi.algebra();
  for (int l : word)
    if (static_cast<std::size_t>(l) == a.unit()) return std::vector<Scalar>(a.dim());
  return hochschild::evaluate(phi, word);
}

int degree_of(const algebra::Algebra& a, const std::vector<int>& w, std::size_t from, std::size_t to) {
  int d = 0;
  for (std::size_t i = from; i < to; ++i) d += a.shifted(static_cast<std::size_t>(w[i]));
  return d & 1;
}

// One homogeneous piece of the tail action, accumulated as a functional on chains.
void tail_piece(const Part& phi, const std::vector<const Part*>& order, std::size_t before, int reorder,
                Functional& g) {
  const auto& a = phi.c.algebra();
  const int n = phi.weight;
  const std::size_t r = order.size();
  if (n < static_cast<int>(r) + 1) return;
  int len = n - static_cast<int>(r);
  for (const Part* p : order) len += p->weight;
  const int unit = static_cast<int>(a.unit());
  for (const auto& z : hochschild::reduced_words(a, len)) {
    const int dz = degree_of(a, z, 0, z.size());
    for (int j = 0; j < len; ++j) {
      Scalar total;
      std::vector<int> slot(r);
      std::function<void(std::size_t, int)> place = [&](std::size_t q, int from) {
        if (q < r) {
          for (int s = from; s < n; ++s) {
            slot[q] = s;
            place(q + 1, s + 1);
          }
          return;
        }
        // walk phi's slots, mapping them to positions in z
        std::vector<std::vector<Scalar>> args;
        int sign = reorder;
        std::size_t zi = 0, qi = 0;
        for (int s = 0; s < n; ++s) {
          if (qi < r && slot[qi] == s) {
            const Part* p = order[qi];
            std::size_t end = zi + static_cast<std::size_t>(p->weight);
            bool first = qi < before;
            if (first && end > static_cast<std::size_t>(j)) return;
            if (!first && zi <= static_cast<std::size_t>(j)) return;
            sign += p->parity * degree_of(a, z, 0, zi);
            auto v = value(p->c, std::vector<int>(z.begin() + static_cast<long>(zi), z.begin() + static_cast<long>(end)));
            v[a.unit()] = Scalar(0);
            args.push_back(std::move(v));
            zi = end;
            ++qi;
          } else {
            std::vector<Scalar> v(a.dim());
            v[static_cast<std::size_t>(z[zi])] = Scalar(1);
            args.push_back(std::move(v));
            ++zi;
          }
        }
        std::vector<int> idx(args.size());
        std::function<void(std::size_t, Scalar)> expand = [&](std::size_t s, Scalar coef) {
          if (s == args.size()) {
            auto v = value(phi.c, idx);
            for (std::size_t o = 0; o < v.size(); ++o) {
              if (v[o].is_zero()) continue;
              Scalar pr = a.pair(o, static_cast<std::size_t>(unit));
              if (pr.is_zero()) continue;
              if (a.parity(o)) pr = -pr;
              if (a.shifted(static_cast<std::size_t>(unit)) & dz) pr = -pr;
              total += (sign & 1) ? -(coef * v[o] * pr) : coef * v[o] * pr;
            }
            return;
          }
          for (std::size_t b = 0; b < args[s].size(); ++b) {
            if (args[s][b].is_zero()) continue;
            idx[s] = static_cast<int>(b);
            expand(s + 1, coef * args[s][b]);
          }
        };
        expand(0, Scalar(1));
      };
      place(0, 0);
      if (total.is_zero()) continue;
      std::vector<int> u(z.begin() + j, z.end());
      u.insert(u.end(), z.begin(), z.begin() + j);
      int bs = degree_of(a, z, 0, static_cast<std::size_t>(j)) * degree_of(a, z, static_cast<std::size_t>(j), z.size());
      g.add(u, bs ? -total : total);
    }
  }
}

}  // namespace

Cochain tail_action(const Cochain& phi, const std::vector<Cochain>& kids, int gap) {
  const int r = static_cast<int>(kids.size());
  if (gap < 0 || gap > r) throw TreeError("tail gap out of range");
  for (const auto& k : kids)
    if (k.algebra_ptr() != phi.algebra_ptr()) throw hochschild::AlgebraMismatch();
  Functional g(phi.algebra_ptr());
  auto phi_parts = parts_of(phi);
  std::vector<std::vector<Part>> kid_parts;
  for (const auto& k : kids) kid_parts.push_back(parts_of(k));
  std::vector<const Part*> chosen(static_cast<std::size_t>(r));
  std::function<void(int)> over = [&](int q) {
    if (q < r) {
      for (const auto& p : kid_parts[static_cast<std::size_t>(q)]) {
        chosen[static_cast<std::size_t>(q)] = &p;
        over(q + 1);
      }
      return;
    }
    // kids gap..r-1 read before the old output slot, kids 0..gap-1 after it
    std::vector<const Part*> order(chosen.begin() + gap, chosen.end());
    order.insert(order.end(), chosen.begin(), chosen.begin() + gap);
    int p_after = 0, p_before = 0;
    for (int i = 0; i < r; ++i) (i < gap ? p_after : p_before) += chosen[static_cast<std::size_t>(i)]->parity;
    int reorder = (p_after * p_before) & 1;
    for (const auto& ph : phi_parts) tail_piece(ph, order, static_cast<std::size_t>(r - gap), reorder, g);
  };
  over(0);
  return hochschild::cochain_of(g);
}

Cochain act(const RibbonTree& t, const std::vector<Cochain>& args) {
  if (static_cast<int>(args.size()) != t.arity())
    throw TreeError("tree of arity " + std::to_string(t.arity()) + " given " + std::to_string(args.size()) +
                    " inputs");
  if (!supported(t)) throw TreeError("unsupported tree shape " + t.encode() + ": white vertex starts on a child edge");
  std::function<Cochain(int)> go = [&](int i) -> Cochain {
    const Vertex& x = t.vertex(i);
    std::vector<Cochain> kids;
    for (int c : x.children) kids.push_back(go(c));
    if (!x.white) {
      Cochain acc = kids[0];
      for (std::size_t j = 1; j < kids.size(); ++j) acc = hochschild::cup(acc, kids[j]);
      return acc;
    }
    const Cochain& phi = args.at(static_cast<std::size_t>(x.label - 1));
    if (x.start == Start::tail) return tail_action(phi, kids, x.start_index);
    return hochschild::brace(phi, kids);
  };
  return go(t.root());
}

bool VanishingReport::all_vanish() const {
  for (const auto& r : rows)
    if (!r.vanishes) return false;
  return true;
}

VanishingReport ker_delta_vanishing(const std::vector<Cochain>& args) {
  if (args.empty()) throw std::invalid_argument("need at least one input");
  for (const auto& a : args)
    if (!hochschild::delta(a).is_zero()) throw std::invalid_argument("input is not in the kernel of Delta");
  const int k = static_cast<int>(args.size());
  VanishingReport rep;
  rep.arity = k;
  for (const auto& t : enumerate(k, 2 * k - 1)) {
    if (t.degree() != 2 * k - 1 || !supported(t)) continue;
    rep.rows.push_back({t.encode(), act(t, args).is_zero()});
  }
  return rep;
}

}  // namespace ncbtt::trees
