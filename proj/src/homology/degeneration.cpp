#include "engine.hpp"

namespace ncbtt::homology {

std::vector<DegenerationVerdict> degeneration_check(const AlgebraPtr& a, int max_order, int window, Field field) {
  if (max_order < 1) throw std::invalid_argument("u-order must be positive");
  if (window < 1) throw WindowError("degeneration needs a window of at least 1", 1);
  CochainComplex c(a, window, field);
  detail::Engine plain(c, 1, Variant::normalized, false);
  std::vector<DegenerationVerdict> out;
  for (int m = 1; m <= max_order; ++m) {
    detail::Engine u(c, m, Variant::normalized, false);
    DegenerationVerdict v;
    v.order = m;
    v.reliable_through = window - 1;
    for (int n = 0; n < window && !v.witness; ++n)
      for (int p = 0; p < 2 && !v.witness; ++p) {
        std::size_t expected = 0;
        for (int j = 0; j < m && n - 2 * j >= 0; ++j) expected += plain.piece(n - 2 * j, p, false).dim;
        std::size_t found = u.piece(n, p, false).dim;
        if (found != expected) {
          v.pass = false;
          v.witness = DegenerationWitness{m, p, n, expected, found};
        }
      }
    out.push_back(v);
  }
  return out;
}

std::vector<Surjectivity> tangent_surjectivity(const AlgebraPtr& a, int window, Field field) {
  if (window < 1) throw WindowError("surjectivity needs a window of at least 1", 1);
  CochainComplex c(a, window, field);
  detail::Engine plain(c, 1, Variant::normalized, false);
  detail::Engine cyc(c, 1, Variant::normalized, true);
  std::vector<Surjectivity> out;
  for (int n = 0; n < window; ++n) {
    Surjectivity s;
    s.weight = n;
    std::size_t rows = c.ambient(n).size();
    for (int p = 0; p < 2; ++p) {
      const auto& target = plain.piece(n, p, false);
      std::vector<SparseVector> cols = target.boundaries;
      std::size_t base = detail::rank_of(cols, rows, field);
      for (const auto& z : cyc.piece(n, p, false).cycles) cols.push_back(z);
      s.image += detail::rank_of(cols, rows, field) - base;
      s.target += target.dim;
    }
    s.surjective = s.image == s.target;
    out.push_back(s);
  }
  return out;
}

bool IotaReport::agree() const {
  for (const auto& r : rows)
    if (r.reliable && !r.agree()) return false;
  return true;
}

IotaReport iota_comparison(const AlgebraPtr& a, int order, int window, Field field) {
  if (order < 1) throw std::invalid_argument("u-order must be positive");
  if (window < 1) throw WindowError("comparison needs a window of at least 1", 1);
  CochainComplex c(a, window, field);
  detail::Engine cyc(c, 1, Variant::strict, true);
  detail::Engine u(c, order, Variant::strict, false);
  IotaReport r{order, window, {}};
  for (int n = 0; n < window; ++n)
    for (int p = 0; p < 2; ++p) {
      IotaRow row;
      row.weight = n;
      row.parity = p;
      row.cyclic_dim = cyc.piece(n, p, false).dim;
      row.u_dim = u.piece(n, p, false).dim;
      row.reliable = 2 * order >= n + 2;
      r.rows.push_back(row);
    }
  return r;
}

}  // namespace ncbtt::homology
