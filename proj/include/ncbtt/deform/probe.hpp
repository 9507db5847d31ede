#pragma once

#include <optional>
#include <vector>

#include "ncbtt/deform/mc.hpp"

namespace ncbtt::deform {

// Lift t * tangent order by order up to k[t]/t^order.
template <Dgla L>
Lift<typename L::Element> lift_to(const L& l, const typename L::Element& tangent, int order, bool cyclic) {
  MCSeries<typename L::Element> x{2, {tangent}};
  if (!is_mc(l, x)) throw std::invalid_argument("tangent is not a cocycle");
  Lift<typename L::Element> cur{Status::lifted, x, std::nullopt, {}};
  while (cur.series.order < order) {
    cur = mc_lift_step(l, cur.series, cyclic);
    if (cur.status != Status::lifted) break;
  }
  return cur;
}

using hochschild::Cochain;
using MCDeformation = MCSeries<Cochain>;

struct ProbeReport {
  Cochain tangent;
  bool cyclic = false;
  int target_order = 0;
  int certified_order = 0;
  Status status = Status::lifted;
  std::optional<Obstruction<Cochain>> obstruction;
  std::string note;
  MCDeformation series;
};

ProbeReport probe(const HochschildDgla& l, const Cochain& tangent, int order, bool cyclic);

// Odd cohomology representatives of weight < window (cyclic: of the cyclic complex).
std::vector<Cochain> tangent_basis(const HochschildDgla& l, int window, bool cyclic);

std::vector<ProbeReport> smoothness_probe(const HochschildDgla& l, int window, int order, bool cyclic);

struct CyclicizeResult {
  bool ok = false;
  MCDeformation series;
  std::vector<Cochain> gauge;  // xi_n per order, t^n coefficient
  int failed_order = -1;
  int failed_weight = -1;
};

CyclicizeResult cyclicize(const HochschildDgla& l, const MCDeformation& x);

}  // namespace ncbtt::deform
