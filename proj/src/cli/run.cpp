#include "ncbtt/cli/run.hpp"

#include <algorithm>
#include <iostream>
#include <random>

#include "ncbtt/algebra/parse.hpp"
#include "ncbtt/hochschild/operators.hpp"
#include "ncbtt/trees/action.hpp"
#include "ncbtt/trees/enumerate.hpp"
#include "report.hpp"

namespace ncbtt::cli {

namespace {

using algebra::AlgebraPtr;
using hochschild::Cochain;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int window_or(const RunConfig& cfg, int fallback) {
  int w = cfg.window.value_or(fallback);
  if (w < 1) throw UsageError("--max-weight must be positive");
  return w;
}

exactla::Field field_of(const RunConfig& cfg, const algebra::Algebra& a) {
  if (cfg.field.empty()) return a.field();
  try {
    return exactla::Field::parse(cfg.field);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void require_rationals(const RunConfig& cfg, const algebra::Algebra& a) {
  if (!field_of(cfg, a).is_rational()) throw UsageError(cfg.command + " runs over Q only");
}

Json header(const RunConfig& cfg, const AlgebraPtr& a) {
  Json j{{"command", cfg.command}};
  if (a) {
    j["algebra"] = a->name();
    j["field"] = field_of(cfg, *a).str();
  }
  return j;
}

// Deterministic across platforms: only raw engine output is used.
Cochain random_cochain(const AlgebraPtr& a, int weight, std::mt19937_64& rng) {
  Cochain c(a);
  for (const auto& w : hochschild::reduced_words(*a, weight))
    for (std::size_t o = 0; o < a->dim(); ++o)
      if (rng() % 10 < 6)
        c.add(hochschild::cochain_letters(w, static_cast<int>(o)), exactla::Scalar(static_cast<long>(rng() % 7) - 3));
  return c;
}

std::vector<Cochain> kernel_basis(const AlgebraPtr& a, int max_weight) {
  homology::CochainComplex cx(a, max_weight + 1, {});
  std::vector<Cochain> out;
  for (int w = 0; w <= max_weight; ++w) {
    const auto& amb = cx.ambient(w);
    if (w == 0) {
      for (std::size_t i = 0; i < amb.size(); ++i) out.push_back(amb.cochain(a, {{i, exactla::Scalar(1)}}));
      continue;
    }
    for (const auto& n : exactla::nullspace(cx.connes(w))) out.push_back(amb.cochain(a, exactla::sparse_from_dense(n)));
  }
  return out;
}

int cmd_validate(const RunConfig& cfg, const AlgebraPtr& a, Json& j) {
  auto r = algebra::validate(*a, 4);
  j.update(validation_json(r));
  return r.all_pass() ? ok : check_failed;
}

int cmd_hh(const RunConfig& cfg, const AlgebraPtr& a, Json& j, bool cyclic) {
  int w = window_or(cfg, 4);
  homology::CochainComplex cx(a, w, field_of(cfg, *a));
  homology::Variant v;
  try {
    v = homology::parse_variant(cfg.variant);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  homology::CohomologyReport r;
  auto field = field_of(cfg, *a);
  if (cfg.weight) {
    int n = *cfg.weight;
    if (cyclic)
      r = homology::cyclic_cohomology(a, n, w, v, field);
    else if (cfg.u_order > 1)
      r = homology::u_homology(a, cfg.u_order, n, w, v, field);
    else
      r = homology::hh(a, n, w, field, v);
  } else if (cyclic)
    r = homology::cyclic_table(cx, v, cfg.representatives);
  else if (cfg.u_order > 1 && cfg.command == "hh")
    r = homology::u_table(cx, cfg.u_order, v, cfg.representatives);
  else
    r = homology::hh_table(cx, v, cfg.representatives);
  j["window"] = w;
  j.update(cohomology_json(r));
  return ok;
}

int cmd_degen(const RunConfig& cfg, const AlgebraPtr& a, Json& j) {
  int w = window_or(cfg, 6);
  auto v = homology::degeneration_check(a, cfg.u_order, w, field_of(cfg, *a));
  bool pass = std::all_of(v.begin(), v.end(), [](const auto& d) { return d.pass; });
  j["window"] = w;
  j["verdicts"] = degeneration_json(v);
  auto s = homology::tangent_surjectivity(a, w, field_of(cfg, *a));
  Json sj = Json::array();
  for (const auto& x : s)
    sj.push_back(Json{{"weight", x.weight}, {"surjective", x.surjective}, {"image", x.image}, {"target", x.target}});
  j["tangent_surjectivity"] = sj;
  j["verdict"] = pass ? "PASS" : "FAIL";
  return pass ? ok : check_failed;
}

int cmd_iota(const RunConfig& cfg, const AlgebraPtr& a, Json& j) {
  int w = window_or(cfg, 5);
  auto r = homology::iota_comparison(a, cfg.u_order, w, field_of(cfg, *a));
  j.update(iota_json(r));
  return r.agree() ? ok : check_failed;
}

int cmd_bv(const RunConfig& cfg, const AlgebraPtr& a, Json& j) {
  require_rationals(cfg, *a);
  int w = window_or(cfg, 3);
  homology::CochainComplex cx(a, w, {});
  auto table = homology::hh_table(cx, homology::Variant::normalized, true);
  struct Rep {
    int weight, parity, index;
    Cochain c;
  };
  std::vector<Rep> reps;
  for (const auto& g : table.groups) {
    if (!g.reliable) continue;
    int i = 0;
    for (const auto& r : g.representatives) reps.push_back({g.weight, g.parity, i++, r.cochain()});
  }
  Json rows = Json::array();
  bool pass = true;
  for (const auto& x : reps)
    for (const auto& y : reps) {
      auto out = homology::bv_defect(x.c, y.c, 2 * w + 2);
      Json row{{"alpha", Json::array({x.weight, x.parity, x.index})},
               {"beta", Json::array({y.weight, y.parity, y.index})},
               {"defect_zero", out.defect.is_zero()},
               {"branch", out.primitive ? "primitive" : "certificate"}};
      if (!out.primitive) {
        pass = false;
        row["certificate_weight"] = out.certificate_weight;
      }
      rows.push_back(row);
    }
  j["window"] = w;
  j["reliable_through"] = w - 1;
  j["pairs"] = rows;
  j["verdict"] = pass ? "PASS" : "FAIL";
  return pass ? ok : check_failed;
}

int cmd_deform(const RunConfig& cfg, const AlgebraPtr& a, Json& j) {
  require_rationals(cfg, *a);
  int w = window_or(cfg, 3);
  if (cfg.order < 2) throw UsageError("--order must be at least 2");
  deform::HochschildDgla l(a, w);
  int code = ok;
  auto fold = [&](const deform::ProbeReport& r) {
    if (r.status == deform::Status::obstructed) code = std::max(code, check_failed);
    if (r.status == deform::Status::window_incomplete) code = usage_error;
  };
  auto plain = deform::smoothness_probe(l, w, cfg.order, false);
  Json pj = Json::array();
  int certified = cfg.order;
  for (const auto& r : plain) {
    fold(r);
    certified = std::min(certified, r.certified_order);
    pj.push_back(probe_json(r));
  }
  j["window"] = w;
  j["order"] = cfg.order;
  j["probes"] = pj;
  if (cfg.cyclic) {
    Json cj = Json::array(), lifts = Json::array();
    for (const auto& r : deform::smoothness_probe(l, w, cfg.order, true)) {
      fold(r);
      certified = std::min(certified, r.certified_order);
      cj.push_back(probe_json(r));
    }
    for (const auto& r : plain) {
      if (r.status != deform::Status::lifted) continue;
      auto c = deform::cyclicize(l, r.series);
      if (!c.ok) code = std::max(code, check_failed);
      lifts.push_back(cyclicize_json(c));
    }
    j["cyclic_probes"] = cj;
    j["cyclic_lifts"] = lifts;
  }
  j["certified_order"] = plain.empty() && !cfg.cyclic ? cfg.order : certified;
  j["status"] = code == ok ? "unobstructed" : code == check_failed ? "obstructed" : "window-incomplete";
  return code;
}

int cmd_trees_enum(const RunConfig& cfg, Json& j) {
  int k = cfg.arity;
  if (k < 1) throw UsageError("--arity must be positive");
  int d = cfg.max_degree.value_or(2 * k - 1);
  auto ts = trees::enumerate(k, d);
  auto c = trees::census(ts, k);
  Json census = Json::array(), list = Json::array();
  for (const auto& [deg, n] : c.by_degree) census.push_back(Json{{"degree", deg}, {"count", n}});
  for (const auto& t : ts)
    list.push_back(Json{{"tree", t.encode()},
                        {"degree", t.degree()},
                        {"supported", trees::supported(t)},
                        {"delta_tail", trees::has_delta_tail(t).has_value()}});
  j["arity"] = k;
  j["max_degree"] = d;
  j["census"] = census;
  j["trees"] = list;
  return ok;
}

int cmd_trees_verify(const RunConfig& cfg, const AlgebraPtr& a, Json& j) {
  require_rationals(cfg, *a);
  int w = window_or(cfg, 2);
  int k = cfg.arity;
  if (k < 1) throw UsageError("--arity must be positive");
  std::mt19937_64 rng(cfg.seed);
  Json checks = Json::array();
  bool pass = true;
  auto check = [&](const std::string& name, bool ok_) {
    checks.push_back(Json{{"check", name}, {"pass", ok_}});
    pass = pass && ok_;
  };

  auto one = trees::enumerate(1, 1);
  check("arity 1 degree 1 is the delta tree",
        std::count_if(one.begin(), one.end(), [](const auto& t) { return t.degree() == 1; }) == 1 &&
            std::any_of(one.begin(), one.end(), [](const auto& t) { return t == trees::delta_tree(); }));
  auto top = trees::enumerate(k, 2 * k + 1);
  check("max degree is 2k-1", trees::census(top, k).max_degree() == 2 * k - 1);
  bool tails = true;
  for (const auto& t : top)
    if (t.degree() == 2 * k - 1 && !trees::has_delta_tail(t)) tails = false;
  check("top degree trees carry a delta tail", tails);

  using namespace hochschild;
  bool agree = true;
  for (int s = 0; s < cfg.samples; ++s) {
    std::vector<Cochain> in;
    for (int i = 0; i < std::max(k, 2) + 1; ++i) in.push_back(random_cochain(a, static_cast<int>(rng() % static_cast<unsigned>(w + 1)), rng));
    agree = agree && trees::act(trees::delta_tree(), {in[0]}) == delta(in[0]);
    agree = agree && trees::act(trees::cup_tree(), {in[0], in[1]}) == cup(in[0], in[1]);
    agree = agree && trees::act(trees::brace_tree(), {in[0], in[1]}) == brace(in[0], {in[1]});
    if (k >= 2) {
      Cochain c = in[0];
      for (int i = 1; i < k; ++i) c = cup(c, in[static_cast<std::size_t>(i)]);
      std::vector<Cochain> args(in.begin(), in.begin() + k);
      agree = agree && trees::act(trees::iterated_cup_tree(k), args) == c;
    }
    std::vector<Cochain> kids(in.begin() + 1, in.begin() + k + 1);
    std::vector<Cochain> args(in.begin(), in.begin() + k + 1);
    agree = agree && trees::act(trees::multi_brace_tree(k), args) == brace(in[0], kids);
  }
  check("named trees agree with delta, cup and brace", agree);

  auto ker = kernel_basis(a, w);
  Json rows = Json::array();
  bool vanish = true;
  for (int s = 0; s < cfg.samples && !ker.empty(); ++s) {
    std::vector<Cochain> args;
    for (int i = 0; i < k; ++i) {
      Cochain c(a);
      for (const auto& b : ker) c += exactla::Scalar(static_cast<long>(rng() % 5) - 2) * b;
      args.push_back(c);
    }
    auto rep = trees::ker_delta_vanishing(args);
    for (const auto& r : rep.rows) {
      rows.push_back(Json{{"sample", s}, {"tree", r.tree}, {"vanishes", r.vanishes}});
      vanish = vanish && r.vanishes;
    }
  }
  check("top degree actions vanish on Ker Delta", vanish);
  j["arity"] = k;
  j["window"] = w;
  j["seed"] = cfg.seed;
  j["checks"] = checks;
  j["vanishing"] = rows;
  j["verdict"] = pass ? "PASS" : "FAIL";
  return pass ? ok : check_failed;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Json j;
  int code = ok;
  try {
    AlgebraPtr a;
    if (cfg.command != "trees-enum") {
      if (cfg.path.empty()) throw UsageError("missing algebra file");
      a = algebra::load_algebra(cfg.path);
    }
    j = header(cfg, a);
    if (cfg.u_order < 1) throw UsageError("--u-order must be positive");
    const std::string& c = cfg.command;
    if (c == "validate")
      code = cmd_validate(cfg, a, j);
    else if (c == "hh")
      code = cmd_hh(cfg, a, j, false);
    else if (c == "cyclic")
      code = cmd_hh(cfg, a, j, true);
    else if (c == "degen")
      code = cmd_degen(cfg, a, j);
    else if (c == "iota")
      code = cmd_iota(cfg, a, j);
    else if (c == "bv-check")
      code = cmd_bv(cfg, a, j);
    else if (c == "deform")
      code = cmd_deform(cfg, a, j);
    else if (c == "trees-enum")
      code = cmd_trees_enum(cfg, j);
    else if (c == "trees-verify")
      code = cmd_trees_verify(cfg, a, j);
    else
      throw UsageError("unknown command '" + c + "'");
  } catch (const homology::WindowError& e) {
    err << "error: " << e.what() << "; needed window " << e.needed() << "\n";
    return usage_error;
  } catch (const trees::ResourceCap& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  if (cfg.format == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    if (cfg.command == "deform" || cfg.command == "degen")
      out << "# evidence, not proof: finite window and truncated order\n";
    render_text(j, out);
  }
  return code;
}

}  // namespace ncbtt::cli
