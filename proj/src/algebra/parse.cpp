#include "ncbtt/algebra/parse.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ncbtt::algebra {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

Scalar scalar_of(const json& j) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  throw ParseError("scalar must be a string 'p/q'");
}

int parity_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be 0 or 1");
  int p = j.get<int>();
  if (p != 0 && p != 1) throw ParseError(std::string(what) + " must be 0 or 1");
  return p;
}

AlgebraPtr parse_document(const json& doc);

}  // namespace

AlgebraPtr parse_algebra(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  try {
    return parse_document(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra: ") + e.what());
  }
}

namespace {

AlgebraPtr parse_document(const json& doc) {

  std::string name = require(doc, "name").get<std::string>();
  Field field;
  try {
    field = Field::parse(doc.value("field", std::string("Q")));
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }

  std::vector<BasisElement> basis;
  std::set<std::string> seen;
  for (const auto& b : require(doc, "basis")) {
    BasisElement e{require(b, "name").get<std::string>(), parity_of(require(b, "parity"), "parity")};
    if (!seen.insert(e.name).second) throw ParseError("duplicated basis name '" + e.name + "'");
    basis.push_back(std::move(e));
  }
  if (basis.empty()) throw ParseError("basis must be nonempty");

  auto index = [&](const json& j) -> std::size_t {
    std::string n = j.get<std::string>();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == n) return i;
    throw ParseError("unknown basis name '" + n + "'");
  };

  std::size_t unit = index(require(doc, "unit"));
  int pp = parity_of(doc.value("pairing_parity", json(0)), "pairing_parity");
  auto alg = std::make_shared<Algebra>(name, field, basis, unit, pp);

  for (const auto& e : doc.value("pairing", json::array())) {
    if (!e.is_array() || e.size() != 3) throw ParseError("pairing entries are [a, b, scalar]");
    std::size_t i = index(e[0]), j = index(e[1]);
    alg->set_pair(i, j, alg->pair(i, j) + scalar_of(e[2]));
  }

  for (const auto& p : doc.value("products", json::array())) {
    int k = require(p, "arity").get<int>();
    std::vector<int> word;
    for (const auto& n : require(p, "inputs")) word.push_back(static_cast<int>(index(n)));
    if (k < 1 || static_cast<int>(word.size()) != k)
      throw ParseError("product arity does not match its inputs");
    SparseVector out;
    std::vector<Scalar> dense(basis.size());
    for (const auto& o : require(p, "output")) {
      if (!o.is_array() || o.size() != 2) throw ParseError("output entries are [name, scalar]");
      dense[index(o[0])] += scalar_of(o[1]);
    }
    alg->add_product(k, word, exactla::sparse_from_dense(dense));
  }

  if (doc.contains("annotations")) {
    const auto& a = doc.at("annotations");
    if (a.contains("smooth")) alg->annotations().smooth = a.at("smooth").get<bool>();
    alg->annotations().expect_valid = a.value("expect_valid", true);
    alg->annotations().notes = a.value("notes", std::string());
  }
  return alg;
}

}  // namespace

AlgebraPtr load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

}  // namespace ncbtt::algebra
