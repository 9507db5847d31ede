#include "report.hpp"

#include <algorithm>
#include <iomanip>

namespace ncbtt::cli {

Json cochain_json(const hochschild::Cochain& c) {
  Json terms = Json::array();
  const auto& a = c.algebra();
  c.for_each([&](int w, const std::vector<int>& letters, const exactla::Scalar& s) {
    Json in = Json::array();
    for (int i = 0; i < w; ++i) in.push_back(a.basis()[static_cast<std::size_t>(letters[static_cast<std::size_t>(i)])].name);
    terms.push_back(Json{{"inputs", in},
                         {"output", a.basis()[static_cast<std::size_t>(letters.back())].name},
                         {"coeff", s.str()}});
  });
  return terms;
}

Json validation_json(const algebra::ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return Json{{"arity_bound", r.arity_bound}, {"checks", checks}, {"pass", r.all_pass()}};
}

Json cohomology_json(const homology::CohomologyReport& r) {
  Json groups = Json::array();
  int reliable_through = -1;
  for (const auto& g : r.groups) {
    Json j{{"weight", g.weight}, {"parity", g.parity}, {"dim", g.dim}, {"reliable", g.reliable}};
    if (g.reliable) reliable_through = std::max(reliable_through, g.weight);
    if (r.u_order > 1) j["u_tower"] = g.u_tower;
    if (!g.representatives.empty()) {
      Json reps = Json::array();
      for (const auto& p : g.representatives) {
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs) coeffs.push_back(cochain_json(c));
        reps.push_back(r.u_order > 1 ? coeffs : coeffs.at(0));
      }
      j["representatives"] = reps;
    }
    groups.push_back(j);
  }
  return Json{{"complex", r.complex},
              {"variant", homology::variant_name(r.variant)},
              {"window", r.window},
              {"u_order", r.u_order},
              {"reliable_through", reliable_through},
              {"groups", groups}};
}

Json degeneration_json(const std::vector<homology::DegenerationVerdict>& v) {
  Json rows = Json::array();
  for (const auto& d : v) {
    Json j{{"u_order", d.order}, {"verdict", d.pass ? "PASS" : "FAIL"}, {"reliable_through", d.reliable_through}};
    if (d.witness)
      j["witness"] = Json{{"u_order", d.witness->order},
                          {"parity", d.witness->parity},
                          {"total_weight", d.witness->total_weight},
                          {"expected", d.witness->expected},
                          {"found", d.witness->found}};
    rows.push_back(j);
  }
  return rows;
}

Json iota_json(const homology::IotaReport& r) {
  Json rows = Json::array();
  for (const auto& x : r.rows)
    rows.push_back(Json{{"weight", x.weight},
                        {"parity", x.parity},
                        {"cyclic_dim", x.cyclic_dim},
                        {"u_dim", x.u_dim},
                        {"reliable", x.reliable},
                        {"agree", x.agree()}});
  return Json{{"u_order", r.order}, {"window", r.window}, {"rows", rows}, {"agree", r.agree()}};
}

Json probe_json(const deform::ProbeReport& r) {
  Json j{{"tangent", cochain_json(r.tangent)},
         {"cyclic", r.cyclic},
         {"target_order", r.target_order},
         {"certified_order", r.certified_order},
         {"status", deform::status_name(r.status)}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.obstruction) {
    Json f = Json::array();
    for (const auto& s : r.obstruction->functional) f.push_back(s.str());
    j["obstruction"] = Json{{"order", r.obstruction->order},
                            {"weight", r.obstruction->weight},
                            {"omega", cochain_json(r.obstruction->omega)},
                            {"functional", f},
                            {"verified", r.obstruction->verified}};
  }
  Json series = Json::array();
  for (const auto& p : r.series.phi) series.push_back(cochain_json(p));
  j["series"] = series;
  return j;
}

Json cyclicize_json(const deform::CyclicizeResult& r) {
  Json j{{"ok", r.ok}};
  if (!r.ok) {
    j["failed_order"] = r.failed_order;
    j["failed_weight"] = r.failed_weight;
    return j;
  }
  Json series = Json::array(), gauge = Json::array();
  for (const auto& p : r.series.phi) series.push_back(cochain_json(p));
  for (const auto& g : r.gauge) gauge.push_back(cochain_json(g));
  j["series"] = series;
  j["gauge"] = gauge;
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + scalar_text(x);
    return s;
  }
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

bool flat(const Json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items()) {
    if (x.is_array() && !x.empty() && x.front().is_structured()) return false;
    if (x.is_object())
      for (const auto& [k2, y] : x.items())
        if (y.is_structured()) return false;
  }
  return true;
}

bool all_flat(const Json& v) {
  for (const auto& x : v)
    if (!flat(x)) return false;
  return true;
}

std::string term_text(const Json& t) {
  std::string s = t.at("coeff").get<std::string>() + " * (";
  bool first = true;
  for (const auto& i : t.at("inputs")) {
    s += (first ? "" : ",") + i.get<std::string>();
    first = false;
  }
  return s + " -> " + t.at("output").get<std::string>() + ")";
}

bool is_cochain(const Json& v) {
  return v.is_array() && !v.empty() && v.front().is_object() && v.front().contains("coeff");
}

void render(const std::string& key, const Json& v, int indent, std::ostream& out) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_array() && v.empty()) {
    out << pad << key << ": 0\n";
  } else if (is_cochain(v)) {
    out << pad << key << ":";
    bool first = true;
    for (const auto& t : v) {
      out << (first ? " " : " + ") << term_text(t);
      first = false;
    }
    out << "\n";
  } else if (v.is_array() && all_flat(v)) {
    out << pad << key << ":\n";
    std::vector<std::string> cols;
    for (const auto& row : v)
      for (const auto& [k, x] : row.items())
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& c : cols) {
      std::size_t w = c.size();
      for (const auto& row : v)
        if (row.contains(c)) w = std::max(w, scalar_text(row.at(c)).size());
      width.push_back(w);
    }
    out << pad << "  ";
    for (std::size_t i = 0; i < cols.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cols[i];
    out << "\n";
    for (const auto& row : v) {
      out << pad << "  ";
      for (std::size_t i = 0; i < cols.size(); ++i)
        out << std::left << std::setw(static_cast<int>(width[i]) + 2) << (row.contains(cols[i]) ? scalar_text(row.at(cols[i])) : "");
      out << "\n";
    }
  } else if (v.is_array() && !v.empty() && v.front().is_structured()) {
    out << pad << key << ":\n";
    int n = 0;
    for (const auto& x : v) render("[" + std::to_string(n++) + "]", x, indent + 2, out);
  } else if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render(k, x, indent + 2, out);
  } else if (v.is_array()) {
    out << pad << key << ": [";
    bool first = true;
    for (const auto& x : v) {
      out << (first ? "" : ", ") << scalar_text(x);
      first = false;
    }
    out << "]\n";
  } else {
    out << pad << key << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

void render_text(const Json& report, std::ostream& out) {
  for (const auto& [k, v] : report.items()) render(k, v, 0, out);
}

}  // namespace ncbtt::cli
