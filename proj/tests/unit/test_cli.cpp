#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "ncbtt/cli/run.hpp"
#include "support.hpp"

using namespace ncbtt::cli;
using nlohmann::json;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out call(RunConfig cfg) {
  std::ostringstream o, e;
  int code = run(cfg, o, e);
  return {code, o.str(), e.str()};
}

RunConfig config(const std::string& command, const std::string& algebra, Format f = Format::json) {
  RunConfig c;
  c.command = command;
  if (!algebra.empty()) c.path = support::source_path("algebras/" + algebra + ".json");
  c.format = f;
  return c;
}

}  // namespace

TEST(Cli, ValidateKxk) {
  auto r = call(config("validate", "kxk"));
  EXPECT_EQ(r.code, ok);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["command"], "validate");
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, DegenDualNumbersFails) {
  auto c = config("degen", "dualnumbers");
  c.u_order = 3;
  c.window = 8;
  auto r = call(c);
  EXPECT_EQ(r.code, check_failed);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "FAIL");
  bool witness = false;
  for (const auto& v : j["verdicts"])
    if (v.contains("witness")) witness = true;
  EXPECT_TRUE(witness);
  EXPECT_EQ(j["window"], 8);
}

TEST(Cli, DegenPassesOnKxk) {
  auto c = config("degen", "kxk");
  c.window = 5;
  EXPECT_EQ(call(c).code, ok);
}

TEST(Cli, DeformDualNumbersCyclic) {
  auto c = config("deform", "dualnumbers");
  c.order = 5;
  c.cyclic = true;
  auto r = call(c);
  EXPECT_EQ(r.code, ok);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["certified_order"], 5);
  EXPECT_EQ(j["status"], "unobstructed");
  ASSERT_FALSE(j["cyclic_lifts"].empty());
  for (const auto& l : j["cyclic_lifts"]) EXPECT_TRUE(l["ok"].get<bool>());
}

TEST(Cli, TextBannerOnDeformAndDegen) {
  for (const char* cmd : {"deform", "degen"}) {
    auto c = config(cmd, "kxk", Format::text);
    c.window = 3;
    c.order = 3;
    auto r = call(c);
    EXPECT_NE(r.out.find("evidence, not proof"), std::string::npos) << cmd;
  }
  auto r = call(config("hh", "kxk", Format::text));
  EXPECT_EQ(r.out.find("evidence, not proof"), std::string::npos);
}

TEST(Cli, HhReportsReliability) {
  auto c = config("hh", "dualnumbers");
  c.u_order = 1;
  c.window = 5;
  c.representatives = true;
  auto j = json::parse(call(c).out);
  EXPECT_EQ(j["reliable_through"], 4);
  for (const auto& g : j["groups"]) EXPECT_EQ(g["reliable"].get<bool>(), g["weight"].get<int>() < 5);
  bool any_rep = false;
  for (const auto& g : j["groups"])
    if (g.contains("representatives")) any_rep = true;
  EXPECT_TRUE(any_rep);
}

TEST(Cli, IotaAndBv) {
  EXPECT_EQ(call(config("iota", "cl1")).code, ok);
  EXPECT_EQ(call(config("bv-check", "kxk")).code, ok);
}

TEST(Cli, TreesEnumCensus) {
  auto c = config("trees-enum", "");
  c.arity = 2;
  auto j = json::parse(call(c).out);
  std::map<int, int> got;
  for (const auto& row : j["census"]) got[row["degree"]] = row["count"];
  EXPECT_EQ(got, (std::map<int, int>{{0, 2}, {1, 8}, {2, 10}, {3, 4}}));
}

TEST(Cli, TreesVerify) {
  auto r = call(config("trees-verify", "dualnumbers"));
  EXPECT_EQ(r.code, ok);
  EXPECT_EQ(json::parse(r.out)["verdict"], "PASS");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call(config("hh", "nonexistent")).code, usage_error);
  EXPECT_EQ(call(config("frobnicate", "kxk")).code, usage_error);
  auto c = config("hh", "kxk");
  c.window = 0;
  EXPECT_EQ(call(c).code, usage_error);
  auto d = config("deform", "kxk");
  d.field = "fp:7";
  EXPECT_EQ(call(d).code, usage_error);
  auto f = config("hh", "kxk");
  f.field = "bogus";
  EXPECT_EQ(call(f).code, usage_error);
}

TEST(Cli, WindowErrorPrintsNeededWindow) {
  auto c = config("hh", "kxk");
  c.window = 3;
  c.weight = 3;
  auto r = call(c);
  EXPECT_EQ(r.code, usage_error);
  EXPECT_NE(r.err.find("needed window 4"), std::string::npos) << r.err;
  c.window = 4;
  r = call(c);
  EXPECT_EQ(r.code, ok);
  EXPECT_EQ(json::parse(r.out)["groups"].size(), 2u);
}

TEST(Cli, PrimeFieldHomology) {
  auto c = config("hh", "kxk");
  c.field = "fp:7";
  auto j = json::parse(call(c).out);
  EXPECT_EQ(j["field"], "Fp:7");
}

TEST(Cli, JsonIsByteDeterministic) {
  for (const char* cmd : {"validate", "hh", "cyclic", "degen", "iota", "bv-check", "deform", "trees-verify"}) {
    auto c = config(cmd, "dualnumbers");
    c.cyclic = true;
    c.representatives = true;
    auto a = call(c), b = call(c);
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_FALSE(a.out.empty()) << cmd;
  }
}
