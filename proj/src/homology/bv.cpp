#include "ncbtt/exactla/elimination.hpp"
#include "ncbtt/hochschild/operators.hpp"
#include "ncbtt/homology/homology.hpp"

namespace ncbtt::homology {

using namespace hochschild;

Cochain bv_defect_cochain(const Cochain& alpha, const Cochain& beta) {
  int b = beta.parity() + 1;
  Cochain d = gerstenhaber(alpha, beta);
  Cochain t = delta(brace_product(alpha, beta));
  if (b & 1) t *= Scalar(-1);
  d -= t;
  d += brace_product(delta(alpha), beta);
  d -= brace_product(alpha, delta(beta));
  return d;
}

BvOutcome bv_defect(const Cochain& alpha, const Cochain& beta, int window) {
  for (const Cochain* x : {&alpha, &beta}) {
    if (!x->is_homogeneous()) throw std::invalid_argument("bv inputs must have a single parity");
    if (!hoch_diff(*x).is_zero()) throw std::invalid_argument("bv inputs must be cocycles");
  }
  const AlgebraPtr& a = alpha.algebra_ptr();
  if (!a->field().is_rational()) throw std::invalid_argument("bv_defect runs over the rationals only");
  BvOutcome out{bv_defect_cochain(alpha, beta), std::nullopt, -1, {}};
  const Cochain& d = out.defect;
  if (d.max_weight() > window)
    throw WindowError("defect reaches weight " + std::to_string(d.max_weight()), d.max_weight());
  CochainComplex c(a, std::max(d.max_weight(), 0), Field{});
  Cochain gamma(a);
  int par = d.is_zero() ? 0 : d.parity();
  for (int w : d.weights()) {
    const Ambient& amb = c.ambient(w);
    auto rhs = exactla::dense_from_sparse(amb.coords(d.component(w)), amb.size());
    std::vector<SparseVector> cols;
    std::vector<std::size_t> src;
    if (w > 0) {
      const Ambient& lower = c.ambient(w - 1);
      const SparseMatrix& m = c.hoch(w - 1);
      for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower.parity(i) != par) {
          cols.push_back(m.column(i));
          src.push_back(i);
        }
    }
    auto res = exactla::cobound_certificate(SparseMatrix::from_columns(amb.size(), cols), rhs);
    if (auto* cert = std::get_if<exactla::Certificate>(&res)) {
      out.certificate_weight = w;
      out.certificate = cert->f;
      return out;
    }
    const auto& x = std::get<exactla::Solution>(res).x;
    SparseVector v;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero()) v.emplace_back(src[j], x[j]);
    gamma += c.ambient(w - 1).cochain(a, v);
  }
  out.primitive = gamma;
  return out;
}

}  // namespace ncbtt::homology
