#include "ncbtt/deform/probe.hpp"

#include "ncbtt/hochschild/cyclic.hpp"
#include "ncbtt/homology/homology.hpp"

namespace ncbtt::deform {

ProbeReport probe(const HochschildDgla& l, const Cochain& tangent, int order, bool cyclic) {
  if (order < 2) throw std::invalid_argument("deformation order must be at least 2");
  if (cyclic && !hochschild::is_cyclic(tangent)) throw std::invalid_argument("tangent is not cyclic");
  auto lift = lift_to(l, tangent, order, cyclic);
  ProbeReport r{tangent, cyclic, order, lift.series.order, lift.status, lift.obstruction, lift.note, lift.series};
  return r;
}

std::vector<Cochain> tangent_basis(const HochschildDgla& l, int window, bool cyclic) {
  homology::CochainComplex c(l.algebra_ptr(), window, exactla::Field{});
  auto table = cyclic ? homology::cyclic_table(c, homology::Variant::normalized, true)
                      : homology::hh_table(c, homology::Variant::normalized, true);
  std::vector<Cochain> out;
  for (const auto& g : table.groups)
    if (g.reliable && g.parity == 1)
      for (const auto& r : g.representatives) out.push_back(r.cochain());
  return out;
}

std::vector<ProbeReport> smoothness_probe(const HochschildDgla& l, int window, int order, bool cyclic) {
  std::vector<ProbeReport> out;
  for (const auto& t : tangent_basis(l, window, cyclic)) out.push_back(probe(l, t, order, cyclic));
  return out;
}

CyclicizeResult cyclicize(const HochschildDgla& l, const MCDeformation& x) {
  if (!is_mc(l, x)) throw std::invalid_argument("cyclicize needs a Maurer-Cartan series");
  CyclicizeResult out;
  out.series = x;
  for (int n = 1; n < x.order; ++n) {
    const Cochain& phi = out.series.phi[static_cast<std::size_t>(n - 1)];
    int w = -1;
    auto xi = l.cyclic_gauge(phi, &w);
    if (!xi) {
      out.failed_order = n;
      out.failed_weight = w;
      return out;
    }
    out.gauge.push_back(*xi);
    if (xi->is_zero()) continue;
    std::vector<Cochain> series(static_cast<std::size_t>(n), l.zero());
    series.back() = *xi;
    out.series = gauge_apply(l, series, out.series);
    if (!hochschild::is_cyclic(out.series.phi[static_cast<std::size_t>(n - 1)]))
      throw std::logic_error("gauge did not produce a cyclic term");
  }
  if (!is_mc(l, out.series)) throw std::logic_error("gauge broke the Maurer-Cartan equation");
  out.ok = true;
  return out;
}

}  // namespace ncbtt::deform
