#include "ncbtt/trees/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace ncbtt::trees {

namespace {

struct Shape {
  bool white = true;
  std::vector<Shape> kids;
};

std::vector<Shape> trees_with(int w);

// Ordered forests of nonempty trees with w whites in total and at least min_count trees.
std::vector<std::vector<Shape>> forests(int w, int min_count) {
  std::vector<std::vector<Shape>> out;
  if (w == 0) {
    if (min_count <= 0) out.push_back({});
    return out;
  }
  for (int first = 1; first <= w; ++first) {
    if (w - first < min_count - 1) continue;
    for (const auto& t : trees_with(first))
      for (auto rest : forests(w - first, min_count - 1)) {
        rest.insert(rest.begin(), t);
        out.push_back(std::move(rest));
      }
  }
  return out;
}

std::vector<Shape> trees_with(int w) {
  static std::vector<std::vector<Shape>> memo;
  static std::vector<bool> done;
  if (static_cast<int>(done.size()) <= w) {
    done.resize(static_cast<std::size_t>(w) + 1, false);
    memo.resize(static_cast<std::size_t>(w) + 1);
  }
  if (done[static_cast<std::size_t>(w)]) return memo[static_cast<std::size_t>(w)];
  std::vector<Shape> out;
  for (auto& f : forests(w - 1, 0)) out.push_back(Shape{true, std::move(f)});
  if (w >= 2)
    for (auto& f : forests(w, 2)) out.push_back(Shape{false, std::move(f)});
  done[static_cast<std::size_t>(w)] = true;
  return memo[static_cast<std::size_t>(w)] = out;
}

void flatten(const Shape& s, std::vector<Vertex>& vs, int& base_degree) {
  int id = static_cast<int>(vs.size());
  vs.push_back(Vertex{s.white, 0, Start::parent, 0, {}});
  int c = static_cast<int>(s.kids.size());
  base_degree += s.white ? c : c - 2;
  for (const auto& k : s.kids) {
    int child = static_cast<int>(vs.size());
    vs[static_cast<std::size_t>(id)].children.push_back(child);
    flatten(k, vs, base_degree);
  }
}

}  // namespace

std::size_t node_cap() {
  if (const char* env = std::getenv("NCBTT_MAX_NODES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("NCBTT_MAX_NODES must be a positive integer");
    }
  }
  return 2000000;
}

std::vector<RibbonTree> enumerate(int k, int d_max, std::size_t cap) {
  if (k < 1) throw std::invalid_argument("arity must be at least 1");
  std::vector<RibbonTree> out;
  std::size_t produced = 0;
  for (const auto& shape : trees_with(k)) {
    std::vector<Vertex> vs;
    int base = 0;
    flatten(shape, vs, base);
    if (base > d_max) continue;
    std::vector<int> whites;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vs[i].white) whites.push_back(static_cast<int>(i));
    // start choices per white vertex: 0 parent, 1..c child, c+1..2c+1 tail
    std::vector<int> choices;
    for (int w : whites) choices.push_back(2 * static_cast<int>(vs[static_cast<std::size_t>(w)].children.size()) + 2);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (std::size_t i = 0; i < whites.size(); ++i) vs[static_cast<std::size_t>(whites[i])].label = perm[i];
      std::vector<int> pick(whites.size(), 0);
      while (true) {
        int tails = 0;
        for (std::size_t i = 0; i < whites.size(); ++i) {
          Vertex& x = vs[static_cast<std::size_t>(whites[i])];
          int c = static_cast<int>(x.children.size());
          int p = pick[i];
          if (p == 0) {
            x.start = Start::parent;
            x.start_index = 0;
          } else if (p <= c) {
            x.start = Start::child;
            x.start_index = p - 1;
          } else {
            x.start = Start::tail;
            x.start_index = p - c - 1;
            ++tails;
          }
        }
        if (base + tails <= d_max) {
          if (++produced > cap) throw ResourceCap("tree enumeration exceeded " + std::to_string(cap) + " trees");
          out.emplace_back(vs, 0);
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i]) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].encode(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<RibbonTree> sorted;
  sorted.reserve(out.size());
  for (const auto& [_, i] : keys) sorted.push_back(out[i]);
  return sorted;
}

TreeCensus census(const std::vector<RibbonTree>& trees, int k) {
  TreeCensus c;
  c.arity = k;
  for (const auto& t : trees) ++c.by_degree[t.degree()];
  return c;
}

}  // namespace ncbtt::trees
