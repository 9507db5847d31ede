#include <algorithm>
#include <map>

#include "engine.hpp"
#include "ncbtt/exactla/elimination.hpp"
#include "ncbtt/hochschild/operators.hpp"

namespace ncbtt::homology {

namespace detail {

std::size_t rank_of(const std::vector<SparseVector>& cols, std::size_t rows, const Field& f) {
  if (cols.empty()) return 0;
  return exactla::rank(SparseMatrix::from_columns(rows, cols), f);
}

namespace {

void add_into(std::map<std::size_t, Scalar>& acc, const SparseVector& col, const Scalar& c, std::size_t shift) {
  for (const auto& [r, v] : col) acc[r + shift] += c * v;
}

SparseVector flatten(const std::map<std::size_t, Scalar>& acc) {
  SparseVector out;
  for (const auto& [i, v] : acc)
    if (!v.is_zero()) out.emplace_back(i, v);
  return out;
}

}  // namespace

Engine::Engine(const CochainComplex& c, int order, Variant v, bool cyclic)
    : c_(c), order_(order), variant_(v), cyclic_(cyclic) {
  if (order < 1) throw std::invalid_argument("u-order must be positive");
  if (cyclic && order != 1) throw std::invalid_argument("cyclic complexes carry no u");
}

Level Engine::level(int total) const {
  Level lev;
  lev.total = total;
  lev.order = order_;
  for (int p = 0; p < order_; ++p) {
    int n = total - 2 * p;
    lev.weight.push_back(n >= 0 ? n : -1);
    lev.offset.push_back(lev.dim);
    if (n >= 0) lev.dim += c_.ambient(n).size();
  }
  return lev;
}

SparseVector Engine::apply_d(const Level& from, const Level& to, const SparseVector& x) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, c] : x) {
    std::size_t p = 0;
    while (p + 1 < from.offset.size() && from.weight[p + 1] >= 0 && i >= from.offset[p + 1]) ++p;
    int n = from.weight[p];
    std::size_t local = i - from.offset[p];
    add_into(acc, c_.hoch(n).column(local), c, to.offset[p]);
    if (!cyclic_ && p + 1 < static_cast<std::size_t>(order_) && n >= 1)
      add_into(acc, c_.connes(n).column(local), c, to.offset[p + 1]);
  }
  return flatten(acc);
}

std::vector<SparseVector> Engine::basis(const Level& lev, int parity) const {
  std::vector<SparseVector> out;
  for (std::size_t p = 0; p < lev.weight.size(); ++p) {
    if (lev.weight[p] < 0) continue;
    for (auto v : c_.basis(lev.weight[p], parity, variant_, cyclic_)) {
      for (auto& [i, c] : v) i += lev.offset[p];
      out.push_back(std::move(v));
    }
  }
  return out;
}

const Piece& Engine::piece(int total, int parity, bool reps) {
  auto key = std::make_pair(total, parity);
  auto it = cache_.find(key);
  if (it != cache_.end() && (!reps || cache_reps_[key])) return it->second;

  Piece pc;
  const Field& f = c_.field();
  Level lev = level(total);
  auto s = basis(lev, parity);
  if (total >= 1) {
    Level prev = level(total - 1);
    for (const auto& b : basis(prev, parity ^ 1)) pc.boundaries.push_back(apply_d(prev, lev, b));
  }
  std::size_t rank_in = rank_of(pc.boundaries, lev.dim, f);
  pc.reliable = total + 1 <= c_.window();
  std::size_t rank_out = 0;
  if (pc.reliable) {
    Level next = level(total + 1);
    std::vector<SparseVector> out;
    for (const auto& b : s) out.push_back(apply_d(lev, next, b));
    if (!s.empty()) {
      auto m = SparseMatrix::from_columns(next.dim, out);
      rank_out = exactla::rank(m, f);
      for (const auto& k : exactla::nullspace(m, f)) {
        std::map<std::size_t, Scalar> acc;
        for (std::size_t j = 0; j < k.size(); ++j)
          if (!k[j].is_zero()) add_into(acc, s[j], k[j], 0);
        pc.cycles.push_back(flatten(acc));
      }
      if (!f.is_rational())
        for (auto& cyc : pc.cycles)
          for (auto& [i, v] : cyc) v = f.normalize(v);
    }
  }
  pc.dim = s.size() - rank_out - rank_in;
  if (reps && pc.reliable && pc.dim > 0) {
    std::vector<SparseVector> cols = pc.boundaries;
    cols.insert(cols.end(), pc.cycles.begin(), pc.cycles.end());
    for (std::size_t j : exactla::pivot_columns(SparseMatrix::from_columns(lev.dim, cols), f))
      if (j >= pc.boundaries.size()) pc.reps.push_back(cols[j]);
    if (pc.reps.size() != pc.dim) throw std::logic_error("representative count disagrees with dimension");
  }
  cache_reps_[key] = reps;
  return cache_[key] = std::move(pc);
}

UPolyCochain Engine::to_poly(const Level& lev, const SparseVector& x) const {
  UPolyCochain u;
  u.order = order_;
  u.total_weight = lev.total;
  const AlgebraPtr& a = c_.algebra_ptr();
  for (std::size_t p = 0; p < lev.weight.size(); ++p) {
    SparseVector part;
    if (lev.weight[p] >= 0) {
      std::size_t lo = lev.offset[p], hi = lo + c_.ambient(lev.weight[p]).size();
      for (const auto& [i, c] : x)
        if (i >= lo && i < hi) part.emplace_back(i - lo, c);
      u.coeffs.push_back(c_.ambient(lev.weight[p]).cochain(a, part));
    } else {
      u.coeffs.emplace_back(a);
    }
  }
  return u;
}

SparseVector Engine::multiply_u(const Level& from, const Level& to, int j, const SparseVector& x) const {
  SparseVector out;
  for (const auto& [i, c] : x) {
    std::size_t p = 0;
    while (p + 1 < from.offset.size() && from.weight[p + 1] >= 0 && i >= from.offset[p + 1]) ++p;
    std::size_t q = p + static_cast<std::size_t>(j);
    if (q >= to.offset.size()) continue;
    out.emplace_back(i - from.offset[p] + to.offset[q], c);
  }
  return out;
}

std::vector<std::size_t> Engine::u_tower(int total, int parity) {
  std::vector<std::size_t> tower;
  const Piece& top = piece(total, parity, false);
  tower.push_back(top.dim);
  if (!top.reliable) return tower;
  Level lev = level(total);
  std::vector<SparseVector> bnd = top.boundaries;
  std::size_t base = rank_of(bnd, lev.dim, c_.field());
  for (int j = 1; j < order_; ++j) {
    if (total - 2 * j < 0) {
      tower.push_back(0);
      continue;
    }
    Level src = level(total - 2 * j);
    std::vector<SparseVector> cols = bnd;
    for (const auto& z : piece(total - 2 * j, parity, false).cycles) cols.push_back(multiply_u(src, lev, j, z));
    tower.push_back(rank_of(cols, lev.dim, c_.field()) - base);
  }
  return tower;
}

Group Engine::group(int total, int parity, bool reps) {
  const Piece& pc = piece(total, parity, reps);
  Group g;
  g.weight = total;
  g.parity = parity;
  g.dim = pc.dim;
  g.reliable = pc.reliable;
  Level lev = level(total);
  for (const auto& r : pc.reps) g.representatives.push_back(to_poly(lev, r));
  if (order_ > 1) g.u_tower = u_tower(total, parity);
  return g;
}

}  // namespace detail

const Cochain& UPolyCochain::cochain() const {
  if (order != 1 || coeffs.size() != 1) throw std::logic_error("not a plain cochain");
  return coeffs[0];
}

UPolyCochain u_differential(const UPolyCochain& x) {
  UPolyCochain y;
  y.order = x.order;
  y.total_weight = x.total_weight + 1;
  for (std::size_t p = 0; p < x.coeffs.size(); ++p) {
    Cochain d = hochschild::hoch_diff(x.coeffs[p]);
    if (p > 0) d += hochschild::delta(x.coeffs[p - 1]);
    y.coeffs.push_back(std::move(d));
  }
  return y;
}

std::size_t CohomologyReport::dim(int weight) const {
  std::size_t d = 0;
  for (const auto& g : groups)
    if (g.weight == weight) d += g.dim;
  return d;
}

std::size_t CohomologyReport::dim(int weight, int parity) const {
  const Group* g = find(weight, parity);
  return g ? g->dim : 0;
}

const Group* CohomologyReport::find(int weight, int parity) const {
  for (const auto& g : groups)
    if (g.weight == weight && g.parity == parity) return &g;
  return nullptr;
}

namespace {

void need(int n, int window) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  if (n + 1 > window)
    throw WindowError("weight " + std::to_string(n) + " needs a window of at least " + std::to_string(n + 1),
                      n + 1);
}

CohomologyReport single(const AlgebraPtr& a, const char* name, int order, bool cyclic, int n, int window, Variant v,
                        Field field) {
  need(n, window);
  CochainComplex c(a, n + 1, field);
  detail::Engine e(c, order, v, cyclic);
  CohomologyReport r{name, v, window, order, {}};
  for (int p = 0; p < 2; ++p) r.groups.push_back(e.group(n, p, true));
  return r;
}

CohomologyReport table(CochainComplex& c, const char* name, int order, bool cyclic, Variant v, bool reps) {
  detail::Engine e(c, order, v, cyclic);
  CohomologyReport r{name, v, c.window(), order, {}};
  for (int n = 0; n <= c.window(); ++n)
    for (int p = 0; p < 2; ++p) r.groups.push_back(e.group(n, p, reps));
  return r;
}

}  // namespace

CohomologyReport hh(const AlgebraPtr& a, int n, int window, Field field, Variant v) {
  return single(a, "hochschild", 1, false, n, window, v, field);
}

CohomologyReport cyclic_cohomology(const AlgebraPtr& a, int n, int window, Variant v, Field field) {
  return single(a, "cyclic", 1, true, n, window, v, field);
}

CohomologyReport u_homology(const AlgebraPtr& a, int order, int n, int window, Variant v, Field field) {
  return single(a, "u-complex", order, false, n, window, v, field);
}

CohomologyReport hh_table(CochainComplex& c, Variant v, bool reps) { return table(c, "hochschild", 1, false, v, reps); }

CohomologyReport cyclic_table(CochainComplex& c, Variant v, bool reps) {
  return table(c, "cyclic", 1, true, v, reps);
}

CohomologyReport u_table(CochainComplex& c, int order, Variant v, bool reps) {
  return table(c, "u-complex", order, false, v, reps);
}

}  // namespace ncbtt::homology
