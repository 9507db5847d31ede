#include "ncbtt/deform/mc.hpp"

#include <map>

#include "ncbtt/exactla/elimination.hpp"
#include "ncbtt/hochschild/operators.hpp"

namespace ncbtt::deform {

using exactla::SparseMatrix;
using exactla::SparseVector;
using hochschild::Cochain;

const char* status_name(Status s) {
  switch (s) {
    case Status::lifted:
      return "unobstructed";
    case Status::obstructed:
      return "obstructed";
    case Status::window_incomplete:
      return "window-incomplete";
  }
  return "?";
}

namespace {

SparseVector times(const SparseMatrix& m, const SparseVector& x) {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, c] : x)
    for (const auto& [r, v] : m.column(i)) acc[r] += c * v;
  SparseVector out;
  for (const auto& [r, v] : acc)
    if (!v.is_zero()) out.emplace_back(r, v);
  return out;
}

Scalar dot(const std::vector<Scalar>& f, const SparseVector& v) {
  Scalar s;
  for (const auto& [i, c] : v) s += f[i] * c;
  return s;
}

}  // namespace

HochschildDgla::HochschildDgla(algebra::AlgebraPtr a, int max_weight)
    : alg_(a), max_weight_(max_weight), complex_(a, max_weight + 1, exactla::Field{}) {
  if (!alg_->field().is_rational()) throw std::invalid_argument("deformations run over the rationals only");
}

void HochschildDgla::check(const Element& x) const {
  if (x.max_weight() > max_weight_)
    throw homology::WindowError("cochain reaches weight " + std::to_string(x.max_weight()) + " beyond " +
                                    std::to_string(max_weight_),
                                x.max_weight());
}

HochschildDgla::Element HochschildDgla::d(const Element& x) const {
  check(x);
  return hochschild::hoch_diff(x);
}

HochschildDgla::Element HochschildDgla::bracket(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return hochschild::gerstenhaber(x, y);
}

Solve<Cochain> HochschildDgla::solve(const Element& rhs, bool cyclic) const {
  Solve<Cochain> out{Status::lifted, zero(), std::nullopt, {}};
  if (rhs.is_zero()) return out;
  const int par = rhs.parity() ^ 1;
  for (int w : rhs.weights()) {
    if (w - 1 > max_weight_) {
      out.status = Status::window_incomplete;
      out.note = "needs unknowns of weight " + std::to_string(w - 1);
      return out;
    }
    const auto& amb = complex_.ambient(w);
    SparseVector target = amb.coords(rhs.component(w));
    std::vector<SparseVector> src, cols;
    if (w > 0) {
      const auto& m = complex_.hoch(w - 1);
      src = complex_.basis(w - 1, par, homology::Variant::normalized, cyclic);
      for (const auto& s : src) cols.push_back(times(m, s));
    }
    auto mat = SparseMatrix::from_columns(amb.size(), cols);
    auto res = exactla::cobound_certificate(mat, exactla::dense_from_sparse(target, amb.size()));
    if (auto* cert = std::get_if<exactla::Certificate>(&res)) {
      Obstruction<Cochain> ob{0, w, zero(), cert->f, false};
      bool kills = true;
      for (const auto& col : cols) kills = kills && dot(cert->f, col).is_zero();
      ob.verified = kills && !dot(cert->f, target).is_zero();
      out.status = Status::obstructed;
      out.obstruction = ob;
      out.note = "no primitive in weight " + std::to_string(w - 1);
      return out;
    }
    const auto& x = std::get<exactla::Solution>(res).x;
    std::map<std::size_t, Scalar> acc;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero())
        for (const auto& [i, c] : src[j]) acc[i] += x[j] * c;
    SparseVector y;
    for (const auto& [i, c] : acc)
      if (!c.is_zero()) y.emplace_back(i, c);
    out.solution += complex_.ambient(w - 1).cochain(alg_, y);
  }
  return out;
}

std::optional<Cochain> HochschildDgla::cyclic_gauge(const Element& phi, int* failed_weight) const {
  check(phi);
  Cochain xi = zero();
  if (phi.is_zero()) return xi;
  const int par = phi.parity();
  for (int w : phi.weights()) {
    const auto& amb = complex_.ambient(w);
    std::vector<SparseVector> cols;
    if (w > 0) {
      const auto& m = complex_.hoch(w - 1);
      const auto& lower = complex_.ambient(w - 1);
      for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower.parity(i) != par) cols.push_back(m.column(i));
    }
    for (auto& b : complex_.basis(w, par, homology::Variant::normalized, true)) cols.push_back(std::move(b));
    auto sol = exactla::solve(SparseMatrix::from_columns(amb.size(), cols),
                              exactla::dense_from_sparse(amb.coords(phi.component(w)), amb.size()));
    if (!sol) {
      if (failed_weight) *failed_weight = w;
      return std::nullopt;
    }
    if (w == 0) continue;
    const auto& lower = complex_.ambient(w - 1);
    SparseVector y;
    std::size_t j = 0;
    for (std::size_t i = 0; i < lower.size(); ++i)
      if (lower.parity(i) != par) {
        if (!(*sol)[j].is_zero()) y.emplace_back(i, (*sol)[j]);
        ++j;
      }
    xi += lower.cochain(alg_, y);
  }
  return xi;
}

Vec3 SyntheticDgla::xi(const Scalar& s) {
  Vec3 v;
  v.v[0] = s;
  return v;
}

Vec3 SyntheticDgla::c(const Scalar& s) {
  Vec3 v;
  v.v[1] = s;
  return v;
}

Vec3 SyntheticDgla::e(const Scalar& s) {
  Vec3 v;
  v.v[2] = s;
  return v;
}

Vec3 SyntheticDgla::bracket(const Vec3& x, const Vec3& y) const { return c(x.v[0] * y.v[0]); }

bool SyntheticDgla::is_zero(const Vec3& x) const {
  for (const auto& s : x.v)
    if (!s.is_zero()) return false;
  return true;
}

Solve<Vec3> SyntheticDgla::solve(const Vec3& rhs, bool) const {
  Solve<Vec3> out{Status::lifted, {}, std::nullopt, {}};
  if (is_zero(rhs)) return out;
  std::size_t q = 0;
  while (rhs.v[q].is_zero()) ++q;
  Obstruction<Vec3> ob{0, 0, {}, std::vector<Scalar>(3), true};
  ob.functional[q] = Scalar(1);
  out.status = Status::obstructed;
  out.obstruction = ob;
  out.note = "d vanishes";
  return out;
}

}  // namespace ncbtt::deform
