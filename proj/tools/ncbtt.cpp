#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "ncbtt/cli/run.hpp"

using ncbtt::cli::Format;
using ncbtt::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"ncbtt: Hochschild, cyclic and deformation computations for finite cyclic algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  int weight = -1;
  int window = std::numeric_limits<int>::min();

  auto common = [&](CLI::App* s, bool file) {
    if (file) s->add_option("algebra", cfg.path, "algebra JSON file")->required();
    s->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--field", cfg.field, "q or fp:<p>");
    s->add_option("--max-weight", window, "weight window");
    s->add_option("--seed", cfg.seed, "random seed");
  };

  auto* validate = app.add_subcommand("validate", "check the algebra hypotheses");
  common(validate, true);
  auto* hh = app.add_subcommand("hh", "Hochschild cohomology by weight");
  common(hh, true);
  int hh_order = 1;
  hh->add_option("--u-order", hh_order, "u-complex order (1 = plain)");
  auto* cyc = app.add_subcommand("cyclic", "cohomology of cyclic cochains");
  common(cyc, true);
  for (auto* s : {hh, cyc}) {
    s->add_option("--variant", cfg.variant, "normalized or strict")->check(CLI::IsMember({"normalized", "strict"}));
    s->add_flag("--reps", cfg.representatives, "print representatives");
    s->add_option("--weight", weight, "only this weight");
  }
  auto* degen = app.add_subcommand("degen", "Hodge-to-de Rham degeneration check");
  common(degen, true);
  degen->add_option("--u-order", cfg.u_order, "largest u-order");
  auto* iota = app.add_subcommand("iota", "compare cyclic cohomology with the u-complex");
  common(iota, true);
  iota->add_option("--u-order", cfg.u_order, "u-order");
  auto* bv = app.add_subcommand("bv-check", "BV identity on cohomology representatives");
  common(bv, true);
  auto* deform = app.add_subcommand("deform", "order by order Maurer-Cartan lifting");
  common(deform, true);
  deform->add_option("--order", cfg.order, "lift over k[t]/t^N");
  deform->add_flag("--cyclic", cfg.cyclic, "also lift cyclically and cyclicize");

  auto* trees = app.add_subcommand("trees", "ribbon trees");
  trees->require_subcommand(1);
  int max_degree = -1;
  auto* tenum = trees->add_subcommand("enum", "enumerate trees of one arity");
  common(tenum, false);
  tenum->add_option("--arity", cfg.arity, "number of inputs");
  tenum->add_option("--max-degree", max_degree, "largest degree (default 2k-1)");
  auto* tverify = trees->add_subcommand("verify", "tree actions against the operators");
  common(tverify, true);
  tverify->add_option("--arity", cfg.arity, "number of inputs");
  tverify->add_option("--samples", cfg.samples, "random samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ncbtt::cli::usage_error;
  }

  for (auto* s : app.get_subcommands()) {
    cfg.command = s->get_name();
    if (cfg.command == "trees") cfg.command += "-" + s->get_subcommands().front()->get_name();
  }
  if (cfg.command == "hh") cfg.u_order = hh_order;
  cfg.format = format == "json" ? Format::json : Format::text;
  if (window != std::numeric_limits<int>::min()) cfg.window = window;
  if (weight >= 0) cfg.weight = weight;
  if (max_degree >= 0) cfg.max_degree = max_degree;
  return ncbtt::cli::run(cfg, std::cout, std::cerr);
}
