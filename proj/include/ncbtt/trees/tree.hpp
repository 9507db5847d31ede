#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncbtt::trees {

// Where a white vertex starts reading its half-edges.
enum class Start { parent, child, tail };

struct Vertex {
  bool white = true;
  int label = 0;  // 1..k on white vertices
  Start start = Start::parent;
  int start_index = 0;  // child index for Start::child, gap for Start::tail
  std::vector<int> children;
};

// Planted planar tree with white input vertices and black product vertices.
// A tail sits in one of the c + 1 gaps of a white vertex with c children.
class RibbonTree {
 public:
  RibbonTree() = default;
  explicit RibbonTree(std::vector<Vertex> vertices, int root = 0);

  // w<label>[^gap | >child](children), b(children)
  static RibbonTree parse(std::string_view text);
  std::string encode() const;

  const std::vector<Vertex>& vertices() const { return v_; }
  const Vertex& vertex(int i) const { return v_.at(static_cast<std::size_t>(i)); }
  int root() const { return root_; }
  int arity() const;
  int degree() const;

  friend bool operator==(const RibbonTree& a, const RibbonTree& b) { return a.encode() == b.encode(); }

 private:
  void check() const;
  std::string encode(int i) const;
  std::vector<Vertex> v_;
  int root_ = 0;
};

// A white leaf whose start is a tail.
std::optional<int> has_delta_tail(const RibbonTree& t);

// Named trees.
RibbonTree delta_tree();
RibbonTree cup_tree();                // T
RibbonTree brace_tree();              // R
RibbonTree iterated_cup_tree(int k);  // T_k
RibbonTree multi_brace_tree(int k);   // W_k, arity k + 1

class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ncbtt::trees
