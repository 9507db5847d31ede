#include "ncbtt/trees/tree.hpp"

#include <cctype>
#include <functional>
#include <set>

namespace ncbtt::trees {

RibbonTree::RibbonTree(std::vector<Vertex> vertices, int root) : v_(std::move(vertices)), root_(root) { check(); }

void RibbonTree::check() const {
  if (v_.empty()) throw TreeError("empty tree");
  if (root_ < 0 || root_ >= static_cast<int>(v_.size())) throw TreeError("root out of range");
  std::vector<int> seen(v_.size(), 0);
  seen[static_cast<std::size_t>(root_)] = 1;
  std::set<int> labels;
  for (const auto& x : v_) {
    for (int c : x.children) {
      if (c < 0 || c >= static_cast<int>(v_.size()) || c == root_) throw TreeError("bad child index");
      if (seen[static_cast<std::size_t>(c)]++) throw TreeError("vertex has two parents");
    }
    const int n = static_cast<int>(x.children.size());
    if (x.white) {
      if (!labels.insert(x.label).second) throw TreeError("repeated label");
      if (x.start == Start::child && (x.start_index < 0 || x.start_index >= n)) throw TreeError("bad child start");
      if (x.start == Start::tail && (x.start_index < 0 || x.start_index > n)) throw TreeError("bad tail gap");
    } else {
      if (n < 2) throw TreeError("black vertices need at least two children");
    }
  }
  for (int s : seen)
    if (s != 1) throw TreeError("tree is not connected");
  int k = static_cast<int>(labels.size());
  if (k == 0 || *labels.begin() != 1 || *labels.rbegin() != k) throw TreeError("labels must be 1..k");
}

int RibbonTree::arity() const {
  int k = 0;
  for (const auto& x : v_) k += x.white;
  return k;
}

int RibbonTree::degree() const {
  int d = 0;
  for (const auto& x : v_) {
    int c = static_cast<int>(x.children.size());
    d += x.white ? c + (x.start == Start::tail) : c - 2;
  }
  return d;
}

std::string RibbonTree::encode(int i) const {
  const Vertex& x = vertex(i);
  std::string s;
  if (x.white) {
    s = "w" + std::to_string(x.label);
    if (x.start == Start::tail) s += "^" + std::to_string(x.start_index);
    if (x.start == Start::child) s += ">" + std::to_string(x.start_index);
  } else {
    s = "b";
  }
  if (!x.children.empty()) {
    s += "(";
    for (std::size_t j = 0; j < x.children.size(); ++j) {
      if (j) s += ",";
      s += encode(x.children[j]);
    }
    s += ")";
  }
  return s;
}

std::string RibbonTree::encode() const { return encode(root_); }

RibbonTree RibbonTree::parse(std::string_view text) {
  std::vector<Vertex> vs;
  std::size_t pos = 0;
  auto fail = [&](const char* what) { throw TreeError(std::string(what) + " at offset " + std::to_string(pos)); };
  auto number = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  std::function<int()> node = [&]() -> int {
    if (pos >= text.size()) fail("unexpected end");
    Vertex x;
    char c = text[pos++];
    if (c == 'w') {
      x.label = number();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        x.start = Start::tail;
        x.start_index = number();
      } else if (pos < text.size() && text[pos] == '>') {
        ++pos;
        x.start = Start::child;
        x.start_index = number();
      }
    } else if (c == 'b') {
      x.white = false;
    } else {
      fail("expected w or b");
    }
    int id = static_cast<int>(vs.size());
    vs.push_back(x);
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<int> kids;
      while (true) {
        kids.push_back(node());
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected , or )");
      }
      vs[static_cast<std::size_t>(id)].children = kids;
    }
    return id;
  };
  int root = node();
  if (pos != text.size()) fail("trailing characters");
  return RibbonTree(std::move(vs), root);
}

std::optional<int> has_delta_tail(const RibbonTree& t) {
  for (std::size_t i = 0; i < t.vertices().size(); ++i) {
    const Vertex& x = t.vertices()[i];
    if (x.white && x.start == Start::tail && x.children.empty()) return static_cast<int>(i);
  }
  return std::nullopt;
}

RibbonTree delta_tree() { return RibbonTree::parse("w1^0"); }
RibbonTree cup_tree() { return RibbonTree::parse("b(w1,w2)"); }
RibbonTree brace_tree() { return RibbonTree::parse("w1(w2)"); }

RibbonTree iterated_cup_tree(int k) {
  if (k < 2) throw TreeError("T_k needs k >= 2");
  std::string s = "b(";
  for (int i = 1; i <= k; ++i) s += (i > 1 ? ",w" : "w") + std::to_string(i);
  return RibbonTree::parse(s + ")");
}

RibbonTree multi_brace_tree(int k) {
  if (k < 0) throw TreeError("W_k needs k >= 0");
  std::string s = "w1";
  if (k > 0) {
    s += "(";
    for (int i = 2; i <= k + 1; ++i) s += (i > 2 ? ",w" : "w") + std::to_string(i);
    s += ")";
  }
  return RibbonTree::parse(s);
}

}  // namespace ncbtt::trees
